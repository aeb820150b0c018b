"""
Runs

Probability of at least r consecutive successes in n trials.
"""

import sys

import streamlit as st

# Add parent directory to path
sys.path.insert(0, '.')

from components.rendering import rational_string
from components.tables import runs_frame
from models.runs import RunQuery
from probability.errors import InversioError
from probability.numeric import parse_rational
from probability.runs import run_prob


def main():
    st.set_page_config(page_title="Runs", page_icon="🔗", layout="wide")
    st.title("🔗 The problem of runs")

    col1, col2, col3 = st.columns(3)
    n = col1.number_input("Trials n", min_value=1, value=20, step=1)
    r = col2.number_input("Run length r", min_value=1, value=4, step=1)
    theta_text = col3.text_input("θ", value="1/2")

    try:
        query = RunQuery(int(n), int(r), parse_rational(theta_text))
        prob = run_prob(query)
        st.metric("P(run of r successes)", f"{float(prob):.10f}")
        st.caption(f"Exact: {rational_string(prob)}")
        st.dataframe(runs_frame(query), hide_index=True)
    except InversioError as e:
        st.error(f"❌ {e}")


if __name__ == "__main__":
    main()
