"""
Command-line front end for the probability laboratory.

Every subcommand prints an aligned table by default, or CSV / JSON with
--format. Exit status: 0 on success, 2 on a usage error, 1 when the inputs are
outside an operation's domain or a computation fails.

Usage:
    python cli.py bernoulli-n --theta 3/5 --eps 1/50 --odds 1000
    python cli.py runs --n 3 --r 2 --theta 1/2 --format json
    python cli.py bayes-interval --p 1 --q 0 --l1 1/2 --l2 1 --exact
"""

import argparse
import logging
import math
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from components.rendering import render
from models.bayes import BetaParams, IntervalQuery, ObservedCounts
from models.bernoulli import create_spec
from models.binomial import EXACT, FLOAT, NumericMode, create_model
from models.output import FORMATS, TABLE, OutputSpec
from models.runs import RunQuery
from models.trichotomy import Scenario
from probability.bayes_inverse import (
    hartley_deviation,
    posterior,
    posterior_interval_prob,
    posterior_mean,
)
from probability.bernoulli_direct import (
    bernoulli_bound_n,
    exact_search_n,
    hoeffding_n,
    odds_from_target,
    verify_bound,
)
from probability.demoivre_approx import (
    implied_log_sqrt_two_pi,
    middle_term_ratio,
    normal_deviation_approx,
    normal_sample_size,
    series_terms,
)
from probability.errors import InversioError, UnsupportedSpecError
from probability.exact_binomial import band_limits, deviation_prob
from probability.numeric import parse_rational
from probability.runs import run_prob
from probability.trichotomy import run_trichotomy
from storage.report_store import write_report
from storage.settings import get_log_level

logger = logging.getLogger(__name__)

OUTPUT_OPTIONS = ('format', 'precision', 'exact', 'out', 'verbose', 'handler', 'command')
MAX_SERIES_TERMS = 100


class LabArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that shows the (sub)command help on a usage error"""

    def error(self, message):
        self.print_help(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


# ==================== ARGUMENT TYPES ====================

def rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except InversioError as e:
        raise argparse.ArgumentTypeError(str(e))


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def count_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def precision_arg(text: str) -> int:
    value = positive_int(text)
    if value > 30:
        raise argparse.ArgumentTypeError(f"precision must lie in [1, 30], got {value}")
    return value


def series_length_arg(text: str) -> int:
    value = positive_int(text)
    if not 2 <= value <= MAX_SERIES_TERMS:
        raise argparse.ArgumentTypeError(f"k-max must lie in [2, {MAX_SERIES_TERMS}], got {value}")
    return value


def grid_arg(text: str) -> List[int]:
    """Comma-separated list of positive integers, e.g. "100,1000,10000" """
    return [positive_int(part.strip()) for part in text.split(",") if part.strip()]


# ==================== HELPERS ====================

def _mode(args) -> NumericMode:
    return NumericMode.exact() if args.exact else NumericMode.float()


def _mode_tag(values: Sequence) -> str:
    return EXACT if all(isinstance(value, Fraction) for value in values if value is not None) else FLOAT


def _prior(args) -> BetaParams:
    return BetaParams(args.prior_a, args.prior_b)


def _require_exact(args, exact: bool, what: str):
    if args.exact and not exact:
        raise UnsupportedSpecError(f"{what} is not available in Exact mode for these inputs")


def _trial_counts(args) -> List[int]:
    return args.n_grid if args.n_grid else [args.n]


# ==================== SUBCOMMANDS ====================
# Each handler returns (rows, columns, mode tag, optional JSON result).

def cmd_direct_prob(args):
    mode = _mode(args)
    rows = []
    for n in _trial_counts(args):
        model = create_model(n, args.theta)
        k_lo, k_hi = band_limits(n, model.theta, args.eps)
        rows.append({
            'n': n,
            'theta': model.theta,
            'eps': args.eps,
            'k_lo': k_lo,
            'k_hi': k_hi,
            'prob': deviation_prob(model, args.eps, mode),
        })
    return rows, ['n', 'theta', 'eps', 'k_lo', 'k_hi', 'prob'], mode.tag, None


def cmd_bernoulli_n(args):
    odds = args.odds if args.target is None else odds_from_target(args.target)
    spec = create_spec(args.theta, args.eps, odds)
    result = bernoulli_bound_n(spec)
    achieved = result.achieved_prob
    if args.exact and not result.exact:
        achieved = verify_bound(spec, result.n, NumericMode.exact())
    row = {
        'r': spec.r,
        's': spec.s,
        't': spec.t,
        'c': spec.c,
        'n': result.n,
        'success_side_n': result.success_side_n,
        'failure_side_n': result.failure_side_n,
        'target': spec.target,
        'achieved_prob': achieved,
    }
    columns = ['r', 's', 't', 'c', 'n', 'success_side_n', 'failure_side_n', 'target', 'achieved_prob']
    return [row], columns, _mode_tag([achieved]), None


def cmd_search_n(args):
    result = exact_search_n(args.theta, args.eps, args.target, args.n_max)
    _require_exact(args, result.exact, f"the crossing at n={result.n} (above the exact limit)")
    row = {
        'n': result.n,
        'achieved_prob': result.achieved_prob,
        'target': result.target,
        'falls_back': result.falls_back,
        'normal_n': normal_sample_size(args.theta, args.eps, args.target),
    }
    columns = ['n', 'achieved_prob', 'target', 'falls_back', 'normal_n']
    if args.hoeffding:
        row['hoeffding_n_nonhistorical'] = hoeffding_n(args.eps, args.target)
        columns.append('hoeffding_n_nonhistorical')
    return [row], columns, EXACT if result.exact else FLOAT, None


def cmd_demoivre(args):
    rows = []
    for n in _trial_counts(args):
        model = create_model(n, args.theta)
        comparison = normal_deviation_approx(model, args.eps, continuity_correction=not args.no_correction)
        _require_exact(args, comparison.exact_rational is not None, f"the binomial side at n={n}")
        rows.append({
            'n': n,
            'theta': model.theta,
            'eps': args.eps,
            'exact': comparison.exact_rational if args.exact else comparison.exact,
            'approx': comparison.approx,
            'abs_error': comparison.abs_error,
            'rel_error': comparison.rel_error,
        })
    columns = ['n', 'theta', 'eps', 'exact', 'approx', 'abs_error', 'rel_error']
    return rows, columns, EXACT if args.exact else FLOAT, None


def cmd_middle_term(args):
    comparison = middle_term_ratio(args.n)
    row = {
        'n': args.n,
        'exact': comparison.exact_rational if args.exact else comparison.exact,
        'approx': comparison.approx,
        'abs_error': comparison.abs_error,
        'rel_error': comparison.rel_error,
    }
    return [row], ['n', 'exact', 'approx', 'abs_error', 'rel_error'], EXACT if args.exact else FLOAT, None


def cmd_stirling_terms(args):
    expansion = series_terms(args.n, args.k_max)
    rows = [
        {
            'k': k,
            'term': term,
            'abs_term': float(abs(term)),
            'is_min': k == expansion.min_abs_index,
            'growth_after': k == expansion.diverges_after,
            'implied_log_sqrt_two_pi': implied_log_sqrt_two_pi(args.n, k),
        }
        for k, term in enumerate(expansion.terms, start=1)
    ]
    result = {
        'n': expansion.n,
        'k_max': expansion.k_max,
        'min_abs_index': expansion.min_abs_index,
        'diverges_after': expansion.diverges_after,
        'log_sqrt_two_pi': 0.5 * math.log(2 * math.pi),
        'terms': rows,
    }
    columns = ['k', 'term', 'abs_term', 'is_min', 'growth_after', 'implied_log_sqrt_two_pi']
    return rows, columns, EXACT, result


def cmd_bayes_interval(args):
    prior = _prior(args)
    data = ObservedCounts(args.p, args.q)
    query = IntervalQuery(args.l1, args.l2)
    post = posterior(prior, data)
    prob = posterior_interval_prob(prior, data, query, _mode(args))
    row = {
        'p': data.p,
        'q': data.q,
        'a_post': post.a,
        'b_post': post.b,
        'l1': query.l1,
        'l2': query.l2,
        'prob': prob,
    }
    return [row], ['p', 'q', 'a_post', 'b_post', 'l1', 'l2', 'prob'], _mode(args).tag, None


def cmd_hartley(args):
    data = ObservedCounts(args.p, args.q)
    prob = hartley_deviation(_prior(args), data, args.eps, _mode(args))
    estimate = data.ratio
    row = {
        'p': data.p,
        'q': data.q,
        'estimate': estimate,
        'band_lo': max(Fraction(0), estimate - args.eps),
        'band_hi': min(Fraction(1), estimate + args.eps),
        'prob': prob,
    }
    return [row], ['p', 'q', 'estimate', 'band_lo', 'band_hi', 'prob'], _mode(args).tag, None


def cmd_runs(args):
    if args.exact and args.float:
        raise UnsupportedSpecError("--exact and --float are mutually exclusive")
    mode = NumericMode.float() if args.float else NumericMode.exact()
    query = RunQuery(n=args.n, r=args.r, theta=args.theta)
    row = {'n': query.n, 'r': query.r, 'theta': query.theta, 'prob': run_prob(query, mode)}
    return [row], ['n', 'r', 'theta', 'prob'], mode.tag, None


def cmd_trichotomy(args):
    scenario = Scenario(
        counts=ObservedCounts(args.p, args.q),
        eps=args.eps,
        target=args.target,
        prior=_prior(args),
        theta_true=args.theta_true,
    )
    report = run_trichotomy(scenario, n_max=args.n_max)

    rows = []
    if report.direct_answer:
        rows.append({
            'answer': 'direct',
            'n': report.direct_answer.n,
            'probability': report.direct_answer.achieved_prob,
        })
    if report.inverse_use_answer:
        inverse = report.inverse_use_answer
        rows.append({
            'answer': 'inverse_use',
            'estimate': inverse.estimate,
            'band_lo': inverse.band_lo,
            'band_hi': inverse.band_hi,
            'statement': inverse.statement,
        })
    if report.bayes_answer:
        bayes = report.bayes_answer
        rows.append({
            'answer': 'bayes',
            'estimate': posterior_mean(bayes.posterior),
            'band_lo': bayes.band_lo,
            'band_hi': bayes.band_hi,
            'probability': bayes.interval_prob,
            'statement': 'prior only' if bayes.prior_only else f"posterior Beta({bayes.posterior.a}, {bayes.posterior.b})",
        })

    probabilities = [row.get('probability') for row in rows]
    mode = _mode_tag(probabilities)
    _require_exact(args, mode == EXACT, "the trichotomy report")
    columns = ['answer', 'n', 'estimate', 'band_lo', 'band_hi', 'probability', 'statement']
    return rows, columns, mode, report.to_dict()


# ==================== PARSER ====================

def _add_output_options(parser: argparse.ArgumentParser):
    group = parser.add_argument_group("output")
    group.add_argument("--format", choices=FORMATS, default=TABLE, help="Output format (default: table)")
    group.add_argument("--precision", type=precision_arg, default=12,
                       help="Significant digits for decimal output, 1-30 (default: 12)")
    group.add_argument("--exact", action="store_true",
                       help="Evaluate in exact rational arithmetic and print rationals as num/den")
    group.add_argument("--out", metavar="PATH", help="Write the rendered output to PATH instead of stdout")
    group.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")


def _add_trials(parser: argparse.ArgumentParser):
    trials = parser.add_mutually_exclusive_group(required=True)
    trials.add_argument("--n", type=positive_int, help="Number of trials")
    trials.add_argument("--n-grid", type=grid_arg, help="Comma-separated trial counts, one row each")


def _add_prior(parser: argparse.ArgumentParser):
    parser.add_argument("--prior-a", type=rational_arg, default=Fraction(1), help="Beta prior shape a (default: 1)")
    parser.add_argument("--prior-b", type=rational_arg, default=Fraction(1), help="Beta prior shape b (default: 1)")


def _subcommand(subparsers, name: str, handler: Callable, help_text: str, columns: str):
    parser = subparsers.add_parser(
        name,
        help=help_text,
        description=f"{help_text}\n\nCSV columns: {columns}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.set_defaults(handler=handler)
    _add_output_options(parser)
    return parser


def build_parser() -> LabArgumentParser:
    parser = LabArgumentParser(
        prog="inversio",
        description="Bernoulli's law, De Moivre's approximation, Bayes's inverse problem and the problem of runs",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    sub = _subcommand(subparsers, "direct-prob", cmd_direct_prob,
                      "P(|X/n - theta| < eps) for known theta",
                      "n,theta,eps,k_lo,k_hi,prob")
    _add_trials(sub)
    sub.add_argument("--theta", type=rational_arg, required=True, help="Success probability, e.g. 3/5")
    sub.add_argument("--eps", type=rational_arg, required=True, help="Band half-width, e.g. 1/50")

    sub = _subcommand(subparsers, "bernoulli-n", cmd_bernoulli_n,
                      "Bernoulli's conservative sample size for theta = r/t, eps = 1/t",
                      "r,s,t,c,n,success_side_n,failure_side_n,target,achieved_prob")
    sub.add_argument("--theta", type=rational_arg, required=True, help="Success probability r/t")
    sub.add_argument("--eps", type=rational_arg, required=True, help="Half-width 1/t")
    odds = sub.add_mutually_exclusive_group()
    odds.add_argument("--odds", type=positive_int, default=1000, help="Moral-certainty odds c : 1 (default: 1000)")
    odds.add_argument("--target", type=rational_arg, help="Target probability, converted to odds")

    sub = _subcommand(subparsers, "search-n", cmd_search_n,
                      "Smallest n whose deviation probability reaches the target",
                      "n,achieved_prob,target,falls_back,normal_n[,hoeffding_n_nonhistorical]")
    sub.add_argument("--theta", type=rational_arg, required=True, help="Success probability")
    sub.add_argument("--eps", type=rational_arg, required=True, help="Band half-width")
    sub.add_argument("--target", type=rational_arg, default=Fraction(999, 1000), help="Target probability (default: 999/1000)")
    sub.add_argument("--n-max", type=positive_int, default=10**6, help="Search limit (default: 1000000)")
    sub.add_argument("--hoeffding", action="store_true", help="Add the modern Hoeffding sample size (non-historical)")

    sub = _subcommand(subparsers, "demoivre", cmd_demoivre,
                      "Normal approximation to the deviation probability next to the exact value",
                      "n,theta,eps,exact,approx,abs_error,rel_error")
    _add_trials(sub)
    sub.add_argument("--theta", type=rational_arg, required=True, help="Success probability, 0 < theta < 1")
    sub.add_argument("--eps", type=rational_arg, required=True, help="Band half-width")
    sub.add_argument("--no-correction", action="store_true", help="Integrate over the raw band, no continuity correction")

    sub = _subcommand(subparsers, "middle-term", cmd_middle_term,
                      "C(n, n/2) / 2^n against 2 / sqrt(2 pi n)",
                      "n,exact,approx,abs_error,rel_error")
    sub.add_argument("--n", type=positive_int, required=True, help="Even number of trials")

    sub = _subcommand(subparsers, "stirling-terms", cmd_stirling_terms,
                      "Terms of the log-factorial correction series at n",
                      "k,term,abs_term,is_min,growth_after")
    sub.add_argument("--n", type=positive_int, required=True, help="Evaluation point")
    sub.add_argument("--k-max", type=series_length_arg, default=60, help=f"Number of terms, 2-{MAX_SERIES_TERMS} (default: 60)")

    sub = _subcommand(subparsers, "bayes-interval", cmd_bayes_interval,
                      "Posterior probability P(l1 < theta < l2 | p successes, q failures)",
                      "p,q,a_post,b_post,l1,l2,prob")
    sub.add_argument("--p", type=count_arg, required=True, help="Observed successes")
    sub.add_argument("--q", type=count_arg, required=True, help="Observed failures")
    sub.add_argument("--l1", type=rational_arg, default=Fraction(0), help="Lower limit (default: 0)")
    sub.add_argument("--l2", type=rational_arg, default=Fraction(1), help="Upper limit (default: 1)")
    _add_prior(sub)

    sub = _subcommand(subparsers, "hartley", cmd_hartley,
                      "Posterior probability that theta lies within eps of p/(p+q)",
                      "p,q,estimate,band_lo,band_hi,prob")
    sub.add_argument("--p", type=count_arg, required=True, help="Observed successes")
    sub.add_argument("--q", type=count_arg, required=True, help="Observed failures")
    sub.add_argument("--eps", type=rational_arg, required=True, help="Band half-width")
    _add_prior(sub)

    sub = _subcommand(subparsers, "runs", cmd_runs,
                      "Probability of at least r consecutive successes in n trials",
                      "n,r,theta,prob")
    sub.add_argument("--n", type=positive_int, required=True, help="Number of trials")
    sub.add_argument("--r", type=positive_int, required=True, help="Run length")
    sub.add_argument("--theta", type=rational_arg, default=Fraction(1, 2), help="Success probability (default: 1/2)")
    sub.add_argument("--float", action="store_true", help="Evaluate in floating point instead of exact arithmetic")

    sub = _subcommand(subparsers, "trichotomy", cmd_trichotomy,
                      "Bernoulli's law, its inverse use and Bayes's theorem side by side",
                      "answer,n,estimate,band_lo,band_hi,probability,statement")
    sub.add_argument("--p", type=count_arg, default=0, help="Observed successes (default: 0)")
    sub.add_argument("--q", type=count_arg, default=0, help="Observed failures (default: 0)")
    sub.add_argument("--theta-true", type=rational_arg, help="Known success probability, enables the direct answer")
    sub.add_argument("--eps", type=rational_arg, default=Fraction(1, 50), help="Band half-width (default: 1/50)")
    sub.add_argument("--target", type=rational_arg, default=Fraction(999, 1000), help="Target probability (default: 999/1000)")
    sub.add_argument("--n-max", type=positive_int, default=10**6, help="Search limit for the direct answer")
    _add_prior(sub)

    return parser


def _configure_logging(verbose: bool):
    logging.basicConfig(
        level=logging.DEBUG if verbose else get_log_level(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse argv, run one subcommand and print its rendered output.

    Args:
        argv: Argument list without the program name (defaults to sys.argv[1:])

    Returns:
        Exit status: 0 success, 1 domain or numerical error, 2 usage error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    _configure_logging(args.verbose)
    spec = OutputSpec(format=args.format, precision=args.precision, exact_flag=args.exact)
    inputs: Dict = {key: value for key, value in vars(args).items() if key not in OUTPUT_OPTIONS}
    logger.info("Running %s (format=%s)", args.command, spec.format)

    try:
        rows, columns, mode, result = args.handler(args)
    except InversioError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    text = render(args.command, inputs, rows, columns, spec, mode, result)
    if args.out:
        write_report(args.out, text)
    else:
        print(text)
    return 0


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
