# Landing page: one scenario, three answers
import logging
import sys

import streamlit as st

# Add parent directory to path
sys.path.insert(0, '.')

from components.tables import trichotomy_frame
from models.bayes import BetaParams, ObservedCounts
from models.trichotomy import Scenario
from probability.errors import InversioError
from probability.numeric import parse_rational
from probability.trichotomy import run_trichotomy
from storage.settings import get_log_level

logging.basicConfig(level=get_log_level())
logger = logging.getLogger(__name__)


@st.cache_data(show_spinner=False)
def compute_report(theta_text: str, p: int, q: int, eps_text: str, target_text: str, prior_a: str, prior_b: str):
    """Run the three procedures; cached on the raw form inputs"""
    scenario = Scenario(
        counts=ObservedCounts(p, q),
        eps=parse_rational(eps_text),
        target=parse_rational(target_text),
        prior=BetaParams(prior_a, prior_b),
        theta_true=parse_rational(theta_text) if theta_text.strip() else None,
    )
    return run_trichotomy(scenario)


def main():
    st.set_page_config(page_title="Probability Laboratory", page_icon="🎲", layout="wide")
    st.title("🎲 Direct and inverse probability")
    st.markdown(
        "Compare what Bernoulli's law, its inverse use and Bayes's theorem each say "
        "about the same band around an observed frequency. Other calculators are in the sidebar."
    )

    with st.form("scenario"):
        col1, col2, col3 = st.columns(3)
        with col1:
            p = st.number_input("Successes p", min_value=0, value=60, step=1)
            q = st.number_input("Failures q", min_value=0, value=40, step=1)
        with col2:
            eps_text = st.text_input("Band half-width ε", value="1/50")
            target_text = st.text_input("Target probability", value="999/1000")
            theta_text = st.text_input("Known θ (optional)", value="3/5")
        with col3:
            prior_a = st.text_input("Prior shape a", value="1")
            prior_b = st.text_input("Prior shape b", value="1")
        submit = st.form_submit_button("Compare", type="primary")

    if not submit:
        return

    try:
        with st.spinner("Computing..."):
            report = compute_report(theta_text, int(p), int(q), eps_text, target_text, prior_a, prior_b)
    except InversioError as e:
        st.error(f"❌ {e}")
        return

    st.dataframe(trichotomy_frame(report), hide_index=True, width="stretch")
    for note in report.notes:
        st.caption(note)
    with st.expander("Report JSON"):
        st.json(report.to_dict())


if __name__ == "__main__":
    main()
