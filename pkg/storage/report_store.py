"""
Write rendered reports to disk for the --out option.
"""
import json
import logging
import os
from typing import Dict

logger = logging.getLogger(__name__)


def write_report(path: str, text: str) -> str:
    """
    Write rendered output to a file, creating parent directories.

    Args:
        path: Destination file path
        text: Rendered table, CSV or JSON text

    Returns:
        Absolute path of the written file
    """
    path = os.path.abspath(path)
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    try:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
            if not text.endswith("\n"):
                f.write("\n")
    except OSError as e:
        logger.error("Error writing %s: %s", path, e)
        raise
    logger.info("Report written to %s", path)
    return path


def read_json_report(path: str) -> Dict:
    """Load a JSON report written by write_report"""
    with open(path, 'r', encoding='utf-8') as f:
        return json.load(f)
