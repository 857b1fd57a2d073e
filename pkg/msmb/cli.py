# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

"""The ``msmb`` command line.

Every command prints one report on stdout, either as text or as a JSON
envelope (``--format json``). Logging goes to stderr. Exit status is 2
for bad input, 1 when a ``check-*`` command answers false under
``--strict`` or a self test fails, and 0 otherwise.
"""

from __future__ import annotations

import logging
import sys
from argparse import ArgumentParser
from dataclasses import dataclass, field
from functools import partial
from random import Random
from typing import TYPE_CHECKING

from ._config import SearchConfig
from .core.bases import (
    circuits, graver, indispensables, minimal_markov_bases,
    universal_markov, verify_markov
)
from .core.distance import (
    check_reduces_circuits, greedy_connect, irreducible_sets,
    is_distance_reducing, is_strongly_distance_reducing,
    universal_distance_reducing, universal_strongly_distance_reducing
)
from .core.lattice import enumerate_fiber
from .core.monomial_curves import (
    admits_first_kind, all_gluing_trees, check_dim3, check_dim4,
    check_first_kind, find_gluings, gluing_type, sign_game
)
from .core.reduction_complex import (
    b_reduction_closure, distance_reducing_complex, metric_cone
)
from .core.report import Report
from .core.selftest import REGISTER as FIXTURES, run_selftest
from .exceptions import InputError, InvalidInput, MSMBError
from .objects.curves import SignMatrix
from .objects.matrix import SemigroupMatrix
from .objects.move_set import MoveSet
from .utils.arithmetic import add
from .utils.parsing import format_vector, parse_basis, parse_rows

if TYPE_CHECKING:
    from argparse import Namespace
    from typing import Any, Callable, Dict, List, Optional, Sequence

    from .utils.types import IntMatrix, Vector

    Handler = Callable[["JobConfig"], "Outcome"]

_log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2

_VERBOSITY = (logging.WARNING, logging.INFO, logging.DEBUG)


@dataclass(frozen=True)
class JobConfig:
    """Everything one command invocation needs.

    Attributes
    ----------
    matrix: Optional[:class:`~msmb.objects.matrix.SemigroupMatrix`]
        The parsed ``--matrix``.
    basis: Optional[Tuple[Tuple[:class:`int`, ...], ...]]
        The rows of ``--basis``, not yet checked against the matrix.
    labels: Optional[Tuple[Tuple[:class:`int`, ...], ...]]
        The rows of ``--labels``.
    bound: Optional[:class:`int`]
        The kernel-ball or exhaustive search bound.
    coeff_bound: Optional[:class:`int`]
        Coefficient bound of the reduction closure.
    search: :class:`~msmb._config.SearchConfig`
        Enumeration caps.
    output: :class:`str`
        ``"text"`` or ``"json"``.
    seed: :class:`int`
        Seed of the commands that pick random inputs.
    strict: :class:`bool`
        Turn false ``check-*`` answers into exit status 1.
    options: Dict[:class:`str`, Any]
        Command specific flags.
    """
    matrix: Optional[SemigroupMatrix] = None
    basis: Optional[IntMatrix] = None
    labels: Optional[IntMatrix] = None
    bound: Optional[int] = None
    coeff_bound: Optional[int] = None
    search: SearchConfig = field(default_factory=SearchConfig)
    output: str = "text"
    seed: int = 0
    strict: bool = False
    options: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        for name in ("bound", "coeff_bound"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                flag = name.replace("_", "-")
                raise InvalidInput(f"--{flag} must be a positive integer.")

    @classmethod
    def from_args(cls, args: Namespace) -> JobConfig:
        """Parse the shared flags.

        Raises
        ------
        :class:`~msmb.exceptions.InputError`
            A matrix or basis does not parse, or a bound is not
            positive.
        """
        try:
            search = SearchConfig.from_env().with_overrides(
                max_cells=args.max_cells, coeff_bound=args.coeff_bound
            )
        except ValueError as error:
            raise InvalidInput(str(error)) from None

        return cls(
            matrix=(
                SemigroupMatrix.parse(args.matrix)
                if args.matrix is not None else None
            ),
            basis=parse_basis(args.basis) if args.basis is not None else None,
            labels=(
                parse_basis(args.labels) if args.labels is not None else None
            ),
            bound=args.bound,
            coeff_bound=args.coeff_bound,
            search=search,
            output=args.format,
            seed=args.seed,
            strict=args.strict,
            options={
                k: getattr(args, k) for k in (
                    "start", "end", "signs", "strong", "projected",
                    "quick", "only", "no_fallback"
                ) if hasattr(args, k)
            }
        )

    def require_matrix(self) -> SemigroupMatrix:
        if self.matrix is None:
            raise InvalidInput("This command needs --matrix.")
        return self.matrix

    def require_basis(self) -> IntMatrix:
        if self.basis is None:
            raise InvalidInput("This command needs --basis.")
        return self.basis

    def moves(self) -> MoveSet:
        """``--basis`` as moves of ``--matrix``."""
        return MoveSet.from_vectors(
            self.require_matrix(), self.require_basis()
        )


@dataclass(frozen=True)
class Outcome:
    """What a command handler produced.

    ``answer`` is set by the commands that answer a yes or no question.
    """
    result: Any
    text: str
    answer: Optional[bool] = None


@dataclass(frozen=True)
class RegisteredCommand:
    name: str
    call: Handler
    help: str
    check: bool = False


REGISTER: Dict[str, RegisteredCommand] = {}


def command(func=None, *, name: Optional[str] = None, check: bool = False):
    """Register a command handler. The name defaults to the function
    name with underscores turned into dashes; the help text is the first
    docstring line.
    """
    if func is None:
        return partial(command, name=name, check=check)

    key = name or func.__name__.replace("_", "-")
    if key in REGISTER:
        raise InvalidInput(f"Command `{key}` is already registered.")

    summary = (func.__doc__ or "").strip().splitlines()
    REGISTER[key] = RegisteredCommand(
        key, func, summary[0] if summary else "", check
    )
    return func


def _lines(moves) -> str:
    return "\n".join(format_vector(m) for m in moves)


def _point(text: str) -> Vector:
    rows = parse_rows(text, allow_negative=False)
    if len(rows) != 1:
        raise InvalidInput(f"Expected a single point, got {len(rows)} rows.")
    return rows[0]


@command(name="circuits")
def circuits_(job: JobConfig) -> Outcome:
    """Circuits: primitive kernel elements of minimal support."""
    result = circuits(job.require_matrix())
    return Outcome(result, _lines(result))


@command(name="graver")
def graver_(job: JobConfig) -> Outcome:
    """Graver basis: conformally primitive kernel elements."""
    result = graver(job.require_matrix(), config=job.search)
    return Outcome(result, _lines(result))


@command(name="indispensables")
def indispensables_(job: JobConfig) -> Outcome:
    """Moves contained in every minimal Markov basis."""
    result = indispensables(job.require_matrix(), config=job.search)
    return Outcome(result, _lines(result))


@command(name="markov-min")
def markov_min(job: JobConfig) -> Outcome:
    """Every minimal Markov basis."""
    bases = minimal_markov_bases(job.require_matrix(), config=job.search)
    blocks = [f"{len(bases)} minimal Markov bases"]
    blocks.extend(_lines(b) for b in bases)
    return Outcome(bases, "\n\n".join(blocks))


@command(name="markov-universal")
def markov_universal(job: JobConfig) -> Outcome:
    """Union of all minimal Markov bases."""
    result = universal_markov(job.require_matrix(), config=job.search)
    return Outcome(result, _lines(result))


@command(name="verify-markov", check=True)
def verify_markov_(job: JobConfig) -> Outcome:
    """Whether --basis connects every fiber."""
    result = verify_markov(
        job.require_matrix(), job.moves(), exhaustive_bound=job.bound,
        config=job.search
    )
    text = "Markov basis" if result else (
        f"NOT a Markov basis ({result.witness} is not connected in the "
        f"fiber of {format_vector(result.target)})"
    )
    return Outcome(result, text, result.markov)


def _reducing_text(check, what: str) -> str:
    if check:
        return what
    return f"NOT {what} ({check.witness} is not reduced)"


@command(name="check-reducing", check=True)
def check_reducing(job: JobConfig) -> Outcome:
    """Graver test: whether --basis is distance reducing."""
    result = is_distance_reducing(
        job.require_matrix(), job.moves(), config=job.search
    )
    return Outcome(
        result, _reducing_text(result, "distance reducing"), result.reducing
    )


@command(name="check-strong", check=True)
def check_strong(job: JobConfig) -> Outcome:
    """Whether --basis is strongly distance reducing."""
    result = is_strongly_distance_reducing(
        job.require_matrix(), job.moves(), config=job.search
    )
    return Outcome(
        result, _reducing_text(result, "strongly distance reducing"),
        result.reducing
    )


@command(name="check-circuits", check=True)
def check_circuits(job: JobConfig) -> Outcome:
    """Whether --basis reduces the distance of every circuit."""
    result = check_reduces_circuits(job.require_matrix(), job.moves())
    return Outcome(
        result, _reducing_text(result, "reduces every circuit"),
        result.reducing
    )


@command(name="check-dim3", check=True)
def check_dim3_(job: JobConfig) -> Outcome:
    """Closed-form distance reduction test for 1x3 matrices."""
    result = check_dim3(job.require_matrix(), job.moves(), config=job.search)
    return Outcome(result, str(result), result.reducing)


@command(name="check-dim4", check=True)
def check_dim4_(job: JobConfig) -> Outcome:
    """Closed-form distance reduction test for 1x4 matrices."""
    result = check_dim4(
        job.require_matrix(), job.moves(),
        fallback=not job.options.get("no_fallback", False),
        config=job.search
    )
    return Outcome(result, str(result), result.reducing)


@command(name="check-first-kind", check=True)
def check_first_kind_(job: JobConfig) -> Outcome:
    """Distance reduction test for gluings of the first kind."""
    triangular = admits_first_kind(
        job.require_matrix(), job.moves(), config=job.search
    )
    if triangular is None:
        return Outcome(
            None, "NOT of the first kind (the sign game is lost)", False
        )
    result = check_first_kind(triangular)
    return Outcome(result, str(result), result.reducing)


@command(name="gluing")
def gluing(job: JobConfig) -> Outcome:
    """Gluing type of a complete intersection."""
    matrix = job.require_matrix()
    tree = gluing_type(matrix)
    trees = [str(t) for t in all_gluing_trees(matrix)]
    result = {
        "complete_intersection": tree is not None,
        "type": str(tree) if tree is not None else None,
        "trees": trees,
        "gluings": find_gluings(matrix),
    }
    text = "\n".join(trees) if trees else "not a complete intersection"
    return Outcome(result, text)


@command(name="sign-game")
def sign_game_(job: JobConfig) -> Outcome:
    """Play the sign game on --signs, or on the signs of --basis."""
    signs = job.options.get("signs")
    matrix = (
        SignMatrix.parse(signs) if signs is not None
        else SignMatrix.from_moves(job.moves().moves)
    )
    play = sign_game(matrix)
    result = {
        "signs": str(matrix),
        "winnable": play is not None,
        "play": [list(p) for p in play] if play is not None else None,
    }
    text = "not winnable" if play is None else "winnable: " + " ".join(
        f"({r + 1},{c + 1})" for r, c in play
    )
    return Outcome(result, text)


@command(name="irreducibles")
def irreducibles(job: JobConfig) -> Outcome:
    """The distance irreducible sets D and D^w."""
    result = irreducible_sets(job.require_matrix(), config=job.search)
    text = "\n".join((
        f"D ({len(result.d)} moves up to sign):", _lines(result.d),
        f"D^w ({len(result.d_weak)} moves up to sign):",
        _lines(result.d_weak)
    ))
    return Outcome(result, text)


@command(name="universal-reducing")
def universal_reducing(job: JobConfig) -> Outcome:
    """All minimal distance-reducing Markov bases and their union."""
    strong = job.options.get("strong", False)
    compute = (
        universal_strongly_distance_reducing if strong
        else universal_distance_reducing
    )
    result = compute(
        job.require_matrix(), bound=job.bound, config=job.search
    )
    adjective = "strongly distance-reducing" if strong else (
        "distance-reducing"
    )
    blocks = [
        f"{len(result.bases)} minimal {adjective} Markov bases",
        "core:\n" + _lines(result.core),
        "union:\n" + _lines(result.union),
    ]
    return Outcome(result, "\n\n".join(blocks))


@command(name="connect")
def connect(job: JobConfig) -> Outcome:
    """Greedy path between two points of a fiber under --basis.

    Without ``--from`` and ``--to`` a point with entries up to 3 and a
    second point of its fiber are drawn with ``--seed``.
    """
    matrix = job.require_matrix()
    start, end = job.options.get("start"), job.options.get("end")
    if (start is None) != (end is None):
        raise InvalidInput("Give both --from and --to, or neither.")

    if start is None:
        rng = Random(job.seed)
        x = tuple(rng.randint(0, 3) for _ in range(matrix.n))
        fiber = enumerate_fiber(matrix, matrix.apply(x), config=job.search)
        y = rng.choice(fiber.points)
    else:
        x, y = _point(start), _point(end)

    steps = greedy_connect(matrix, job.moves(), x, y, config=job.search)
    points: List[Vector] = [tuple(x)]
    for step in steps:
        points.append(add(points[-1], step))

    result = {
        "from": list(x), "to": list(y),
        "steps": [list(s) for s in steps],
        "points": [list(p) for p in points],
    }
    return Outcome(result, _lines(points))


def _vectors(job: JobConfig) -> IntMatrix:
    if job.labels is not None:
        return job.labels
    return job.require_basis()


@command(name="metric-cone")
def metric_cone_(job: JobConfig) -> Outcome:
    """Extreme rays of the metric cone of --labels (or --basis)."""
    result = metric_cone(_vectors(job), config=job.search)
    return Outcome(result, _lines(result.rays))


@command(name="reduction-complex")
def reduction_complex(job: JobConfig) -> Outcome:
    """Cones of the distance reducing complex of --basis over --labels."""
    cones = distance_reducing_complex(
        job.require_basis(), _vectors(job), coeff_bound=job.coeff_bound,
        projected=job.options.get("projected", False), config=job.search
    )
    blocks = [f"{len(cones)} cones"]
    for cone in cones:
        blocks.append(
            "reducers " + format_vector(i + 1 for i in cone.transversal)
            + ":\n" + _lines(cone.rays)
        )
    return Outcome(cones, "\n\n".join(blocks))


@command(name="closure")
def closure(job: JobConfig) -> Outcome:
    """Close --labels (or --basis) under reductions by --basis."""
    labels = b_reduction_closure(
        job.require_basis(), _vectors(job), coeff_bound=job.coeff_bound,
        config=job.search
    )
    return Outcome(labels, _lines(labels))


@command(name="selftest", check=True)
def selftest(job: JobConfig) -> Outcome:
    """Reproduce the known fixture answers."""
    records = run_selftest(
        quick=job.options.get("quick", False),
        only=job.options.get("only"),
        config=job.search
    )
    passed = all(r.passed for r in records)
    text = "\n".join(str(r) for r in records)
    return Outcome(records, text, passed)


def _add_shared(parser: ArgumentParser):
    parser.add_argument("--matrix", help='Matrix rows, e.g. "3 5 11".')
    parser.add_argument(
        "--basis", help='Moves, one per row, e.g. "5 -3 0; 2 1 -1".'
    )
    parser.add_argument(
        "--labels", help="Vectors labelling the norm variables."
    )
    parser.add_argument(
        "--format", choices=("text", "json"), default="text",
        help="Output format (default: text)."
    )
    parser.add_argument(
        "--strict", action="store_true",
        help="Exit with status 1 when a check answers false."
    )
    parser.add_argument(
        "--seed", type=int, default=0,
        help="Seed for commands that draw random inputs."
    )
    parser.add_argument(
        "--bound", type=int, help="Kernel-ball or exhaustive search bound."
    )
    parser.add_argument(
        "--coeff-bound", type=int,
        help="Coefficient bound of the reduction closure."
    )
    parser.add_argument(
        "--max-cells", type=int, help="Override the enumeration cap."
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="Log progress to stderr (-vv for debug output)."
    )


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="msmb",
        description="Markov, Graver and distance reducing bases of "
                    "integer matrices."
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    for name, registered in REGISTER.items():
        sub = subparsers.add_parser(name, help=registered.help)
        _add_shared(sub)

        if name == "connect":
            sub.add_argument("--from", dest="start", help="Start point.")
            sub.add_argument("--to", dest="end", help="End point.")
        elif name == "sign-game":
            sub.add_argument("--signs", help='Sign rows, e.g. "+-0; 0+-".')
        elif name == "universal-reducing":
            sub.add_argument(
                "--strong", action="store_true",
                help="Strongly distance reducing bases instead."
            )
        elif name == "reduction-complex":
            sub.add_argument(
                "--projected", action="store_true",
                help="Skip the closure and drop unlabelled reductions."
            )
        elif name == "check-dim4":
            sub.add_argument(
                "--no-fallback", action="store_true",
                help="Fail instead of running the Graver test."
            )
        elif name == "selftest":
            sub.add_argument(
                "--quick", action="store_true", help="Skip slow fixtures."
            )
            sub.add_argument(
                "--only", nargs="+", choices=sorted(FIXTURES),
                help="Run only these fixtures."
            )

    return parser


def run(name: str, job: JobConfig) -> int:
    """Run one command and print its report.

    Returns
    -------
    :class:`int`
        The exit status.
    """
    registered = REGISTER[name]
    outcome = registered.call(job)

    if job.output == "json":
        print(Report(name, outcome.result))
    else:
        print(outcome.text)

    if name == "selftest" and not outcome.answer:
        return EXIT_FALSE
    if registered.check and job.strict and outcome.answer is False:
        return EXIT_FALSE
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the ``msmb`` script."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=_VERBOSITY[min(args.verbose, len(_VERBOSITY) - 1)],
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s"
    )

    try:
        job = JobConfig.from_args(args)
        return run(args.command, job)
    except InputError as error:
        print(f"msmb: error: {error}", file=sys.stderr)
        return EXIT_INPUT
    except MSMBError as error:
        _log.debug("Command %s failed.", args.command, exc_info=True)
        print(f"msmb: error: {error}", file=sys.stderr)
        return EXIT_INPUT
