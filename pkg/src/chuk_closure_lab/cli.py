"""
Command-line interface for the closure lab.

Every verb runs one pipeline of library operations and prints text, JSON or
DOT on stdout. Logs go to stderr so that stdout is the same for the same
inputs and budgets.

Exit codes: 0 success or positive verdict, 1 negative verdict (not
separable, unknown, non-member, unequal), 2 usage or input error.
"""

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

# Load .env file if present
try:
    from dotenv import load_dotenv

    # Look for .env in current directory and project root
    env_file = Path.cwd() / ".env"
    if env_file.exists():
        load_dotenv(env_file)
        logging.getLogger(__name__).debug(f"Loaded environment from {env_file}")
    else:
        # Try project root (where pyproject.toml is)
        project_root = Path(__file__).parent.parent.parent
        env_file = project_root / ".env"
        if env_file.exists():
            load_dotenv(env_file)
            logging.getLogger(__name__).debug(f"Loaded environment from {env_file}")
except ImportError:
    # python-dotenv not installed - environment variables must be set manually
    pass

from pydantic import ValidationError

from . import __version__
from .config import config
from .errors import ClosureLabError, EmptyLanguageError
from .factorization import (
    build_factorization_graph,
    enumerate_factorizations,
    history_at,
    vertex_name,
)
from .freegroup import (
    GroupWord,
    closure_g,
    group_automaton,
    rational_member,
    subgroup_of_rational,
)
from .freegroup.words import InverseStyle, letter_of
from .languages import (
    RegexPlus,
    compile_regex,
    find_cube,
    parse_regex,
    syntactic_monoid,
    syntactic_semigroup,
    thue_morse_iterate,
)
from .languages.regex import regex_symbols
from .preview import export_dot
from .registry import Command, CommandRegistry
from .semigroups import PseudovarietyPredicate, SemigroupMorphism, load_table, write_table
from .separation import (
    NotSeparable,
    Separable,
    SeparationBudgets,
    closure_expr,
    enumerate_closure_terms,
    separate_by_v,
)
from .terms import normalize_unary_bn, parse_exponent, parse_term
from .terms.evaluation import (
    epsilon_expand,
    equal_over_g,
    eval_term,
    expansion_length,
    to_free_group_word,
)

logger = logging.getLogger(__name__)

SCHEMA = 1

# (exit code, output text, JSON payload, DOT text)
Outcome = Tuple[int, str, Dict[str, Any], Optional[str]]


def setup_logging(debug: bool = False, log_level: Optional[str] = None) -> None:
    """
    Configure logging based on arguments.

    Args:
        debug: Enable debug mode
        log_level: Explicit log level (DEBUG, INFO, WARNING, ERROR)
    """
    level = logging.DEBUG if debug else logging.WARNING

    if log_level:
        level = getattr(logging, log_level.upper(), logging.WARNING)

    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )


def _style(args: argparse.Namespace) -> InverseStyle:
    style: InverseStyle = getattr(args, "inverse_style", None) or config.inverse_style
    return style


def _compact(data: Any) -> str:
    return json.dumps(data, separators=(",", ":"))


# Verbs


def cmd_closure_g(args: argparse.Namespace) -> Outcome:
    style = _style(args)
    regex = parse_regex(args.regex, style=style)
    automaton = closure_g(regex)
    elements = [w.to_text(style) for w in automaton.elements(args.max_length)]
    data: Dict[str, Any] = {
        "regex": regex.to_text(),
        "closure": automaton.to_json(),
        "elements": elements,
    }
    lines = [
        f"closure of {regex.to_text()}: {automaton.dfa.num_states} states",
        f"elements up to length {args.max_length}: {', '.join(e or '1' for e in elements)}",
    ]
    code = 0
    if args.member is not None:
        member = rational_member(automaton, GroupWord.parse(args.member, style))
        data["member"] = {"word": args.member, "in_closure": member}
        lines.append(f"{args.member}: {'member' if member else 'not a member'}")
        code = 0 if member else 1

    dot = None
    if args.format == "dot":
        dot = export_dot(automaton.dfa)
        if isinstance(regex, RegexPlus):
            letters = sorted({letter_of(s) for s in regex_symbols(regex)})
            try:
                dot = export_dot(subgroup_of_rational(group_automaton(regex.inner, letters)))
            except EmptyLanguageError:
                pass
    return code, "\n".join(lines), data, dot


def cmd_separate(args: argparse.Namespace) -> Outcome:
    style = _style(args)
    predicate = PseudovarietyPredicate.parse(args.cls)
    k, l = parse_regex(args.k, style=style), parse_regex(args.l, style=style)
    budgets = SeparationBudgets(
        max_states=args.max_states or config.max_states,
        max_terms=args.max_terms or config.max_terms,
    )
    logger.info(f"Separating {k.to_text()} from {l.to_text()} over {predicate.label()}")
    verdict = separate_by_v(k, l, predicate, budgets, workers=args.workers)

    label = predicate.label()
    if isinstance(verdict, Separable):
        lines = [f"separable over {label}: {verdict.separator}"]
        if verdict.recognizer is not None:
            lines.append(f"recognizer: {_compact(verdict.recognizer.to_json())}")
    elif isinstance(verdict, NotSeparable):
        witness = verdict.witness
        text = witness.to_text(style) if isinstance(witness, GroupWord) else witness.to_text()
        lines = [f"not separable over {label}: witness {text or '1'}"]
        if verdict.partner is not None:
            lines.append(f"partner: {verdict.partner.to_text()}")
    else:
        lines = [f"unknown over {label} within {_compact(budgets.to_json())}"]
    return (0 if verdict.is_positive else 1), "\n".join(lines), verdict.to_json(style), None


def cmd_expand(args: argparse.Namespace) -> Outcome:
    term = parse_term(args.term)
    n = args.n or config.expansion_n
    word = epsilon_expand(term, n)
    data = {"term": term.to_text(), "n": n, "length": len(word), "word": word}
    return 0, word, data, None


def cmd_histories(args: argparse.Namespace) -> Outcome:
    term = parse_term(args.term)
    n = args.n or config.expansion_n
    data: Dict[str, Any] = {"term": term.to_text(), "n": n}
    if args.position is not None:
        history = history_at(term, n, args.position)
        data.update(position=args.position, history=history.to_json())
        return 0, _compact(history.to_json()), data, None

    total = expansion_length(term, n)
    limit = args.limit or config.path_limit
    if total > limit:
        logger.warning(f"Listing {limit} of {total} positions")
    rows = list(enumerate_factorizations(term, n, limit))
    data["histories"] = [{"position": p, "history": h.to_json()} for p, h in rows]
    text = "\n".join(f"{p}: {_compact(h.to_json())}" for p, h in rows)
    return 0, text, data, None


def cmd_graph(args: argparse.Namespace) -> Outcome:
    term = parse_term(args.term)
    regex = parse_regex(args.lang)
    alphabet = sorted(regex_symbols(regex) | term.letters())
    graph = build_factorization_graph(term, compile_regex(regex, alphabet), args.k, args.mode)

    edges = [
        {
            "source": vertex_name(e.source),
            "target": vertex_name(e.target),
            "label": e.label(graph.m, graph.p),
        }
        for e in graph.edges
    ]
    data = {
        "term": term.to_text(),
        "k": graph.k,
        "mode": graph.mode,
        "m": graph.m,
        "p": graph.p,
        "copies": graph.copies,
        "vertices": [
            {"name": vertex_name(v), **graph.witnesses[v].model_dump()} for v in graph.vertices
        ],
        "edges": edges,
    }
    lines = [f"k={graph.k} mode={graph.mode} m={graph.m} p={graph.p} copies={graph.copies}"]
    for v in graph.vertices:
        w = graph.witnesses[v]
        lines.append(f"vertex {vertex_name(v)}: {w.u}|{w.z}|{w.v}")
    lines.extend(f"{e['source']} -{e['label']}-> {e['target']}" for e in edges)
    dot = export_dot(graph) if args.format == "dot" else None
    return 0, "\n".join(lines), data, dot


def cmd_syntactic(args: argparse.Namespace) -> Outcome:
    regex = parse_regex(args.regex)
    alphabet = list(args.alphabet) if args.alphabet else None
    dfa = compile_regex(regex, alphabet).minimize()
    if args.monoid:
        semigroup, morphism = syntactic_monoid(dfa, fresh_identity=False)
    else:
        semigroup, morphism = syntactic_semigroup(dfa)
    data = {
        "regex": regex.to_text(),
        "automaton": dfa.to_json(),
        "size": semigroup.size,
        "table": [list(row) for row in semigroup.table],
        "identity": semigroup.identity,
        "images": dict(morphism.images),
    }
    lines = [
        f"minimal automaton: {dfa.num_states} states",
        f"syntactic {'monoid' if args.monoid else 'semigroup'}: {morphism.describe()}",
        write_table(semigroup).rstrip("\n"),
    ]
    dot = export_dot(dfa) if args.format == "dot" else None
    return 0, "\n".join(lines), data, dot


def _parse_images(text: str) -> Dict[str, int]:
    images: Dict[str, int] = {}
    for item in text.split(","):
        letter, sep, value = item.partition("=")
        if not sep or not letter.strip():
            raise ValueError(f"image {item!r} must have the form letter=element")
        images[letter.strip()] = int(value)
    return images


def cmd_eval_term(args: argparse.Namespace) -> Outcome:
    semigroup = load_table(Path(args.table))
    images = _parse_images(args.images)
    morphism = SemigroupMorphism(alphabet=tuple(sorted(images)), target=semigroup, images=images)
    term = parse_term(args.term)
    value = eval_term(morphism, term)
    data = {"term": term.to_text(), "images": images, "value": value}
    return 0, str(value), data, None


def cmd_wordproblem_g(args: argparse.Namespace) -> Outcome:
    style = _style(args)
    left, right = parse_term(args.left), parse_term(args.right)
    equal = equal_over_g(left, right)
    data = {
        "left": left.to_text(),
        "right": right.to_text(),
        "left_image": to_free_group_word(left).to_text(style),
        "right_image": to_free_group_word(right).to_text(style),
        "equal": equal,
    }
    text = f"{'equal' if equal else 'not equal'} over G"
    return (0 if equal else 1), text, data, None


def cmd_enumerate(args: argparse.Namespace) -> Outcome:
    regex = parse_regex(args.regex)
    budget = args.max_terms or config.max_terms
    terms = [t.to_text() for t in enumerate_closure_terms(closure_expr(regex), budget)]
    data = {"regex": regex.to_text(), "budget": budget, "terms": terms}
    return 0, "\n".join(terms), data, None


def cmd_normalize_bn(args: argparse.Namespace) -> Outcome:
    alpha = parse_exponent(args.exponent)
    result = normalize_unary_bn(alpha, args.n)
    data = {"exponent": alpha.to_text(), "n": args.n, "normal_form": result.to_text()}
    return 0, result.to_text(), data, None


def cmd_thue_morse(args: argparse.Namespace) -> Outcome:
    word = thue_morse_iterate(args.k, args.x, args.y)
    cube = find_cube(word)
    data = {
        "k": args.k,
        "length": len(word),
        "word": word,
        "cube_free": cube is None,
        "cube": list(cube) if cube is not None else None,
    }
    text = f"{word}\ncube-free: {'yes' if cube is None else f'no, at {cube[0]} period {cube[1]}'}"
    return (0 if cube is None else 1), text, data, None


HANDLERS: Dict[str, Callable[[argparse.Namespace], Outcome]] = {
    "closure-g": cmd_closure_g,
    "separate": cmd_separate,
    "expand": cmd_expand,
    "histories": cmd_histories,
    "graph": cmd_graph,
    "syntactic": cmd_syntactic,
    "eval-term": cmd_eval_term,
    "wordproblem-g": cmd_wordproblem_g,
    "enumerate": cmd_enumerate,
    "normalize-bn": cmd_normalize_bn,
    "thue-morse": cmd_thue_morse,
}


# Parser


def _add_format(parser: argparse.ArgumentParser, formats: List[str]) -> None:
    parser.add_argument("--format", choices=formats, default="text", help="Output format")
    parser.add_argument(
        "--json", action="store_true", help="Shorthand for --format json (versioned schema)"
    )


def _add_style(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--inverse-style",
        choices=["prime", "capital"],
        help="Write inverses as a' (prime) or A (capital)",
    )


def create_parser() -> argparse.ArgumentParser:
    """Create argument parser for CLI."""
    parser = argparse.ArgumentParser(
        prog="closure-lab",
        description="Closure lab - profinite closures and separation of rational languages",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Expand a kappa-term with omega read as 4!
  %(prog)s expand --term "(a^w b)^w" --n 4

  # Separate by group languages
  %(prog)s separate --class G --k "(aa)^+" --l "a(aa)^+ + a" --json

  # History of one split
  %(prog)s histories --term "a^w b a^w" --n 4 --position 24

  # Factorization graph as DOT
  %(prog)s graph --term "a^w" --lang "aa + aaa" --format dot

Environment Variables:
  CLOSURE_LAB_MAX_STATES      Separator search bound (default 3)
  CLOSURE_LAB_MAX_TERMS       Closure terms per side (default 500)
  CLOSURE_LAB_EXPANSION_N     Default n of epsilon_n (default 4)
  CLOSURE_LAB_WORKERS         Process pool width for separator search
  CLOSURE_LAB_DEBUG=1         Enable debug logging
  CLOSURE_LAB_LOG_LEVEL       Log level (DEBUG, INFO, WARNING, ERROR)
        """,
    )

    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    parser.add_argument("--debug", action="store_true", help="Enable debug logging")

    parser.add_argument(
        "--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="Set logging level"
    )

    subparsers = parser.add_subparsers(dest="command", help="Workbench verb")
    commands = CommandRegistry.list_commands()

    def verb(name: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=commands[name]["description"])
        _add_format(sub, commands[name]["formats"])
        return sub

    closure = verb("closure-g")
    closure.add_argument("--regex", required=True, help="Rational expression over X and X^-1")
    closure.add_argument("--member", help="Group word to test for membership")
    closure.add_argument(
        "--max-length", type=int, default=3, help="Length of listed elements (default: 3)"
    )
    _add_style(closure)

    separate = verb("separate")
    separate.add_argument(
        "--class", dest="cls", required=True, help="G, A, S, Bn:<n> or Custom:<l>=<r>;..."
    )
    separate.add_argument("--k", required=True, help="Language to contain")
    separate.add_argument("--l", required=True, help="Language to avoid")
    separate.add_argument("--max-states", type=int, help="Largest candidate automaton")
    separate.add_argument("--max-terms", type=int, help="Closure terms per side")
    separate.add_argument("--workers", type=int, help="Process pool width for the search")
    _add_style(separate)

    expand = verb("expand")
    expand.add_argument("--term", required=True, help="Kappa-term, e.g. (a^w b)^(w-1)")
    expand.add_argument("--n", type=int, help="Expansion index, at least 4")

    histories = verb("histories")
    histories.add_argument("--term", required=True, help="Kappa-term")
    histories.add_argument("--n", type=int, help="Expansion index, at least 4")
    histories.add_argument("--position", type=int, help="Split position (all when omitted)")
    histories.add_argument("--limit", type=int, help="Most positions listed")

    graph = verb("graph")
    graph.add_argument("--term", required=True, help="Term with one top-level block")
    graph.add_argument("--lang", required=True, help="Rational expression of L")
    graph.add_argument("--k", type=int, help="Expansion index, at least 4")
    graph.add_argument("--mode", choices=["explicit", "symbolic"], default="explicit")

    syntactic = verb("syntactic")
    syntactic.add_argument("--regex", required=True, help="Rational expression")
    syntactic.add_argument("--alphabet", help="Letters of X, e.g. ab")
    syntactic.add_argument("--monoid", action="store_true", help="Syntactic monoid instead")

    evaluate = verb("eval-term")
    evaluate.add_argument("--term", required=True, help="Kappa-term")
    evaluate.add_argument("--table", required=True, help="Semigroup table file")
    evaluate.add_argument("--images", required=True, help="Letter images, e.g. a=0,b=1")

    wordproblem = verb("wordproblem-g")
    wordproblem.add_argument("--left", required=True, help="Kappa-term")
    wordproblem.add_argument("--right", required=True, help="Kappa-term")
    _add_style(wordproblem)

    enumerate_ = verb("enumerate")
    enumerate_.add_argument("--regex", required=True, help="Rational expression")
    enumerate_.add_argument("--max-terms", type=int, help="Terms to list")

    normalize = verb("normalize-bn")
    normalize.add_argument("--exponent", required=True, help="Exponent, e.g. w+7")
    normalize.add_argument("--n", type=int, required=True, help="Parameter of x^(w+n) = x^w")

    thue = verb("thue-morse")
    thue.add_argument("--k", type=int, required=True, help="Iteration count")
    thue.add_argument("--x", default="a", help="First letter (default: a)")
    thue.add_argument("--y", default="b", help="Second letter (default: b)")

    return parser


def _render(fmt: str, outcome: Outcome) -> str:
    _, text, data, dot = outcome
    if fmt == "json":
        return json.dumps({"schema": SCHEMA, **data}, indent=2) + "\n"
    if fmt == "dot" and dot is not None:
        return dot
    return text + "\n" if text else ""


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one verb and return its exit code"""
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    setup_logging(
        debug=bool(args.debug or os.environ.get("CLOSURE_LAB_DEBUG")),
        log_level=args.log_level or os.environ.get("CLOSURE_LAB_LOG_LEVEL"),
    )

    if args.command is None:
        parser.print_help(sys.stderr)
        return 2

    if args.json:
        args.format = "json"
    try:
        command = Command(verb=args.command, format=args.format)
        outcome = HANDLERS[command.verb](args)
    except (ClosureLabError, ValidationError, ValueError, OSError) as e:
        print(f"{args.command}: error: {e}", file=sys.stderr)
        return 2

    sys.stdout.write(_render(command.format, outcome))
    return outcome[0]


def main() -> None:
    """Main entry point for CLI."""
    sys.exit(run())


if __name__ == "__main__":
    main()
