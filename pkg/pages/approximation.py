"""
De Moivre's Approximation

Normal approximation errors, the middle-term ratio and the divergent
log-factorial series.
"""

import sys

import streamlit as st

# Add parent directory to path
sys.path.insert(0, '.')

from components.tables import comparison_frame, series_frame
from probability.demoivre_approx import middle_term_ratio, series_terms
from probability.errors import InversioError
from probability.numeric import parse_rational


def main():
    st.set_page_config(page_title="De Moivre's Approximation", page_icon="🔔", layout="wide")
    st.title("🔔 De Moivre's approximation")

    tab1, tab2, tab3 = st.tabs(["Normal approximation", "Middle term", "Log-factorial series"])

    with tab1:
        col1, col2 = st.columns(2)
        theta_text = col1.text_input("θ", value="1/2")
        eps_text = col2.text_input("ε", value="1/10")
        grid_text = st.text_input("Trial counts", value="100, 1000, 10000")
        correction = st.checkbox("Continuity correction", value=True)
        try:
            trial_counts = [int(part) for part in grid_text.split(",") if part.strip()]
            frame = comparison_frame(parse_rational(theta_text), parse_rational(eps_text), trial_counts, correction)
            st.dataframe(frame, hide_index=True)
        except (InversioError, ValueError) as e:
            st.error(f"❌ {e}")

    with tab2:
        n = st.number_input("Even n", min_value=2, value=100, step=2)
        try:
            comparison = middle_term_ratio(int(n))
            col1, col2, col3 = st.columns(3)
            col1.metric("C(n, n/2) / 2ⁿ", f"{comparison.exact:.10f}")
            col2.metric("2 / √(2πn)", f"{comparison.approx:.10f}")
            col3.metric("Relative error", f"{comparison.rel_error:.3e}")
        except InversioError as e:
            st.error(f"❌ {e}")

    with tab3:
        col1, col2 = st.columns(2)
        n_series = col1.number_input("n", min_value=1, value=5, step=1)
        k_max = col2.number_input("Terms", min_value=2, max_value=100, value=40, step=1)
        expansion = series_terms(int(n_series), int(k_max))
        st.caption(
            f"Smallest term at k = {expansion.min_abs_index}; "
            + (f"terms grow after k = {expansion.diverges_after}" if expansion.diverges_after
               else "no growth within the computed terms")
        )
        st.dataframe(series_frame(expansion), hide_index=True)


if __name__ == "__main__":
    main()
