"""
Bernoulli's Law

Deviation probabilities for known θ, Bernoulli's sample-size bound and the
exact minimal sample size.
"""

import sys

import streamlit as st

# Add parent directory to path
sys.path.insert(0, '.')

from components.tables import deviation_frame, pmf_frame
from models.bernoulli import create_spec
from models.binomial import BinomialModel
from probability.bernoulli_direct import bernoulli_bound_n, exact_search_n, odds_from_target
from probability.errors import InversioError
from probability.numeric import parse_rational


def render_bound(theta, eps, target):
    """Bernoulli's bound next to the exact first crossing"""
    col1, col2 = st.columns(2)
    with col1:
        try:
            result = bernoulli_bound_n(create_spec(theta, eps, odds_from_target(target)))
            st.metric("Bernoulli's bound", f"{result.n:,}")
            st.caption(
                f"success side {result.success_side_n:,}, failure side {result.failure_side_n:,}; "
                f"probability reached {float(result.achieved_prob):.6f}"
            )
        except InversioError as e:
            st.info(f"Bound not available: {e}")
    with col2:
        with st.spinner("Searching..."):
            result = exact_search_n(theta, eps, target)
        st.metric("Exact minimal n", f"{result.n:,}")
        if result.falls_back:
            st.caption("⚠️ the probability drops below the target again shortly after this n")


def main():
    st.set_page_config(page_title="Bernoulli's Law", page_icon="📐", layout="wide")
    st.title("📐 Bernoulli's law")

    col1, col2, col3 = st.columns(3)
    theta_text = col1.text_input("θ", value="3/5")
    eps_text = col2.text_input("ε", value="1/50")
    target_text = col3.text_input("Target probability", value="1000/1001")
    grid_text = st.text_input("Trial counts", value="50, 500, 5000")

    try:
        theta = parse_rational(theta_text)
        eps = parse_rational(eps_text)
        target = parse_rational(target_text)
        trial_counts = [int(part) for part in grid_text.split(",") if part.strip()]
        st.subheader("Deviation probability")
        st.dataframe(deviation_frame(theta, eps, trial_counts), hide_index=True)

        st.subheader("Sample size")
        render_bound(theta, eps, target)

        with st.expander("Distribution at the first trial count"):
            st.dataframe(pmf_frame(BinomialModel(trial_counts[0], theta), eps), hide_index=True)
    except (InversioError, ValueError, IndexError) as e:
        st.error(f"❌ {e}")


if __name__ == "__main__":
    main()
