"""
Inverse Probability

Posterior interval probabilities under a Beta prior, and the posterior mass
of the band around the observed ratio as the sample grows.
"""

import sys

import streamlit as st

# Add parent directory to path
sys.path.insert(0, '.')

from components.tables import laplace_frame
from models.bayes import BetaParams, IntervalQuery, ObservedCounts
from probability.bayes_inverse import hartley_deviation, posterior, posterior_interval_prob, posterior_mean
from probability.errors import InversioError
from probability.numeric import parse_rational
from probability.trichotomy import laplace_convergence


def main():
    st.set_page_config(page_title="Inverse Probability", page_icon="🔁", layout="wide")
    st.title("🔁 Inverse probability")

    col1, col2, col3, col4 = st.columns(4)
    p = col1.number_input("Successes p", min_value=0, value=6, step=1)
    q = col2.number_input("Failures q", min_value=0, value=4, step=1)
    prior_a = col3.text_input("Prior a", value="1")
    prior_b = col4.text_input("Prior b", value="1")

    try:
        prior = BetaParams(prior_a, prior_b)
        data = ObservedCounts(int(p), int(q))
        post = posterior(prior, data)
        st.caption(f"Posterior Beta({post.a}, {post.b}), mean {float(posterior_mean(post)):.6f}")

        st.subheader("Interval")
        col1, col2 = st.columns(2)
        l1 = parse_rational(col1.text_input("ℓ₁", value="1/2"))
        l2 = parse_rational(col2.text_input("ℓ₂", value="7/10"))
        prob = posterior_interval_prob(prior, data, IntervalQuery(l1, l2))
        st.metric("P(ℓ₁ < θ < ℓ₂ | data)", f"{float(prob):.10f}")

        if not data.is_empty:
            eps = parse_rational(st.text_input("Band half-width ε", value="1/10"))
            st.metric("Posterior mass within ε of p/(p+q)", f"{float(hartley_deviation(prior, data, eps)):.10f}")
    except (InversioError, ValueError) as e:
        st.error(f"❌ {e}")

    st.subheader("Growing samples at a fixed ratio")
    col1, col2, col3 = st.columns(3)
    ratio_p = col1.number_input("Ratio p", min_value=1, value=3, step=1)
    ratio_q = col2.number_input("Ratio q", min_value=1, value=2, step=1)
    eps_text = col3.text_input("ε ", value="1/50")
    try:
        rows = laplace_convergence(int(ratio_p), int(ratio_q), parse_rational(eps_text), [100, 1000, 10000])
        st.dataframe(laplace_frame(rows), hide_index=True)
    except InversioError as e:
        st.error(f"❌ {e}")


if __name__ == "__main__":
    main()
