# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""
Pfaffschub main entry point
"""

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

import importlib_metadata
from packaging.version import Version

from pfaffschub import __version__, tableaux
from pfaffschub.cache import GroebnerCache, disabled_cache
from pfaffschub.complexes import is_vertex_decomposable, subword_complex
from pfaffschub.config import PfaffschubConfiguration, load_config
from pfaffschub.coxeter import (Diagram, Permutation, dominant_component, essential_set,
                                fpf_length, fpf_standardize, from_cycles, in_fpf_image, in_window,
                                is_fpf_dominant, length, parse_cycles, parse_fpf_cycles,
                                parse_one_line, rank_table, rothe_diagram, ss_rothe_diagram,
                                staircase)
from pfaffschub.errors import (BudgetError, PermutationError, PfaffschubError, RankTableError,
                               UsageError, VerificationError)
from pfaffschub.groebner import MonomialIdeal, intersect_all, monomial_ideal_of_cells
from pfaffschub.grothendieck import (beta_transform, evaluate_at_one, groth_sp_dominant,
                                     groth_sp_dreams, groth_sp_inclusion_exclusion, groth_sp_kpoly,
                                     kpoly_to_json, kpoly_to_text, lowest_x_degree)
from pfaffschub.pipedreams import (CLASSICAL, FPF, delta_fpf, dreams_to_json, enumerate_fp,
                                   enumerate_fp_plus, enumerate_rp, reading_word, render_ascii)
from pfaffschub.polyring import GENERAL, REVLEX, SKEW, TERM_ORDERS, Monomial, get_order
from pfaffschub.schubert_ideals import (GeneratorSet, classical_generators, groebner_generators_ss,
                                        ssi_generators, ssj_generators)
from pfaffschub.tableaux import (dbl, greene_statistic, rank_table_of_monomial, realize_rank_table,
                                 ss_rank_table_of_monomial, support_matrix)
from pfaffschub.verify import (SUITES, SuiteOptions, VerificationReport, replay, run_suite,
                               summary_table, write_replays)

log = logging.getLogger(__name__)

OptionDef = Tuple[List[str], Dict[str, Any]]

FORMATS = ("json", "text", "ascii")
ROUTES = ("kpoly", "dreams", "inclusion-exclusion", "dominant")


def get_version() -> Version:
    "Installed version, or the source tree version when running uninstalled"
    try:
        return Version(importlib_metadata.version("pfaffschub"))
    except importlib_metadata.PackageNotFoundError:
        return Version(__version__)


class Output(NamedTuple):
    "What a subcommand produced, in every supported format"
    data: Any
    text: str
    ascii: Optional[str] = None
    error: Optional[PfaffschubError] = None


class Session:
    "Settings of one invocation: flags take precedence over the configuration file"

    # pylint: disable=too-few-public-methods

    def __init__(self, args: argparse.Namespace, conf: PfaffschubConfiguration):
        self.args = args
        self.conf = conf
        self.order = get_order(args.order)
        self.budget = conf.budget
        if args.budget_pairs is not None:
            self.budget = self.budget._replace(pairs=args.budget_pairs)
        self.cache_dir = args.cache_dir or conf.cache_dir
        self.cache_enabled = conf.cache.enabled and not args.no_cache
        self.jobs = args.jobs or conf.jobs
        self.seed = args.seed if args.seed is not None else conf.verify.seed

    def cache(self) -> GroebnerCache:
        "Gröbner cache for this run"
        if not self.cache_enabled:
            return disabled_cache()
        return GroebnerCache(self.cache_dir, self.conf.cache.paranoid, version=str(get_version()))


class Subject(NamedTuple):
    "Object a subcommand works on"
    kind: str
    perm: Optional[Permutation]
    m: int
    n: int
    cells: Optional[Diagram]


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text} is not a positive integer")
    return value


def parse_cells(text: str) -> Diagram:
    "Parse 'r,c;r,c;...' into a diagram"
    cells = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            i, j = (int(part) for part in chunk.split(","))
        except ValueError as err:
            raise UsageError(f"Malformed cell '{chunk}' in --cells") from err
        if i < 1 or j < 1:
            raise UsageError(f"Cell '{chunk}' must have positive coordinates")
        cells.append((i, j))
    return Diagram(cells)


def _require_n(args: argparse.Namespace) -> int:
    if args.n is None:
        raise UsageError("--n is required for involution input")
    return args.n


def _subject(args: argparse.Namespace, allow_cells: bool = True) -> Subject:
    cells = parse_cells(args.cells) if getattr(args, "cells", None) is not None else None
    if cells is not None and not allow_cells:
        raise UsageError("--cells can't be used with this command")
    if args.fpf is not None or args.inv is not None:
        n = _require_n(args)
        if args.fpf is not None:
            z = parse_fpf_cycles(args.fpf)
            if not in_fpf_image(z, n):
                raise PermutationError(f"Window mismatch: {z} is not in FPF_{n}(I_{n})")
        else:
            y = from_cycles(parse_cycles(args.inv), n)
            if not y.is_involution():
                raise PermutationError(f"'{args.inv}' is not an involution")
            z = fpf_standardize(y, n)
        return Subject(FPF, z, n, n, cells)
    if args.perm is not None:
        w = parse_one_line(args.perm)
        n = args.n if args.n is not None else max(w.window, 1)
        m = args.m if args.m is not None else n
        if not in_window(w, m, n):
            raise PermutationError(f"Window mismatch: {w} is not in S^({m},{n})")
        return Subject(CLASSICAL, w, m, n, cells)
    if cells is not None:
        skew = not args.classical and all(i > j for i, j in cells)
        if skew:
            n = args.n if args.n is not None else max((i for i, _ in cells), default=1)
            return Subject(FPF, None, n, n, cells)
        n = args.n if args.n is not None else max((j for _, j in cells), default=1)
        m = args.m if args.m is not None else max((i for i, _ in cells), default=1)
        return Subject(CLASSICAL, None, m, n, cells)
    raise UsageError("One of --fpf, --inv, --perm or --cells is required")


def _need_perm(subject: Subject, what: str) -> Permutation:
    if subject.perm is None:
        raise UsageError(f"{what} needs --fpf, --inv or --perm")
    return subject.perm


def _need_fpf(subject: Subject, what: str) -> Permutation:
    if subject.kind != FPF or subject.perm is None:
        raise UsageError(f"{what} needs a fixed-point-free involution (--fpf or --inv)")
    return subject.perm


def _check_staircase(cells: Diagram, n: int):
    if any(not n >= i > j for i, j in cells):
        raise UsageError(f"Cells {list(cells)} are not inside ▽_{n}")


def _cells_text(cells) -> str:
    return " ".join(f"({i},{j})" for i, j in cells) or "-"


def _name(subject: Subject) -> str:
    perm = subject.perm
    if perm is None:
        return _cells_text(subject.cells or ())
    if subject.kind == CLASSICAL:
        return " ".join(str(x) for x in perm.one_line()) or "1"
    return str(perm)


def _lines(pairs: Sequence[Tuple[str, Any]]) -> str:
    return "\n".join(f"{key}: {value}" for key, value in pairs)


def cmd_diagram(session: Session) -> Output:
    "Rothe diagram, essential set and dominant component"
    subject = _subject(session.args, allow_cells=False)
    perm = _need_perm(subject, "diagram")
    if subject.kind == FPF:
        diagram = ss_rothe_diagram(perm)
        dom, corners = dominant_component(perm)
        data = {
            "z": str(perm),
            "n": subject.n,
            "fpf_length": len(diagram),
            "diagram": diagram.to_json(),
            "essential_set": essential_set(diagram).to_json(),
            "dominant_component": dom.to_json(),
            "corners": corners.to_json(),
            "fpf_dominant": is_fpf_dominant(perm, subject.n),
        }
        text = _lines([("z", perm), ("fpf_length", len(diagram)),
                       ("diagram", _cells_text(diagram)),
                       ("essential_set", _cells_text(essential_set(diagram))),
                       ("dominant_component", _cells_text(dom)),
                       ("corners", _cells_text(corners))])
        return Output(data, text, render_ascii(diagram, subject.n, FPF))
    diagram = rothe_diagram(perm)
    data = {
        "w": perm.one_line(),
        "m": subject.m,
        "n": subject.n,
        "length": length(perm),
        "diagram": diagram.to_json(),
        "essential_set": essential_set(diagram).to_json(),
    }
    text = _lines([("w", _name(subject)), ("length", length(perm)),
                   ("diagram", _cells_text(diagram)),
                   ("essential_set", _cells_text(essential_set(diagram)))])
    return Output(data, text, render_ascii(diagram, subject.n, CLASSICAL, subject.m))


def cmd_rank_table(session: Session) -> Output:
    "Rank table of a permutation or of a monomial given by --cells"
    args = session.args
    subject = _subject(args)
    data: Dict[str, Any] = {"m": subject.m, "n": subject.n}
    if subject.perm is not None:
        if args.greene:
            raise UsageError("--greene needs a monomial given by --cells")
        table = rank_table(subject.perm, subject.m, subject.n)
        data["source"] = _name(subject)
    else:
        mono = Monomial.of(*subject.cells)  # type: ignore
        if subject.kind == FPF:
            table = ss_rank_table_of_monomial(mono, subject.n)
            support = dbl(mono)
            mode = tableaux.FPF
        else:
            table = rank_table_of_monomial(mono, subject.m, subject.n)
            support = mono
            mode = tableaux.CLASSICAL
        data["source"] = str(mono)
        try:
            realization = realize_rank_table(table, mode)
            data["realization"] = (str(realization) if mode == tableaux.FPF else
                                   realization.one_line())
        except RankTableError as err:
            log.info("Rank table is not realizable: %s", err)
            data["realization"] = None
        if args.greene:
            matrix = support_matrix(support, subject.m, subject.n)
            greene = [[greene_statistic(matrix, i, j) for j in range(1, subject.n + 1)]
                      for i in range(1, subject.m + 1)]
            data["greene"] = greene
            data["greene_agrees"] = greene == table.rows()
    data["table"] = table.rows()
    text = "\n".join(" ".join(str(x) for x in row) for row in table.rows())
    return Output(data, text)


def _generators(session: Session, subject: Subject) -> Tuple[GeneratorSet, MonomialIdeal]:
    perm = _need_perm(subject, "ideal")
    if subject.kind == FPF:
        if session.args.pfaffian_basis:
            gens = groebner_generators_ss(perm, subject.n)
        else:
            gens = ssi_generators(perm, subject.n, session.args.essential_only)
        return gens, ssj_generators(perm, subject.n)
    return classical_generators(perm, subject.m, subject.n)


def cmd_ideal(session: Session) -> Output:
    "Generators of I^ss_z or I_w with their provenance"
    subject = _subject(session.args, allow_cells=False)
    gens, _ = _generators(session, subject)
    data = gens.to_json(session.order)
    return Output(data, "\n".join(data["generators"]))  # type: ignore


def cmd_monomial_ideal(session: Session) -> Output:
    "J^ss_z, J_w or the ideal of the variables in --cells"
    subject = _subject(session.args)
    if subject.perm is None:
        space = SKEW if subject.kind == FPF else GENERAL
        ideal = monomial_ideal_of_cells(subject.cells or (), space)
    elif subject.kind == FPF:
        ideal = ssj_generators(subject.perm, subject.n)
    else:
        _, ideal = classical_generators(subject.perm, subject.m, subject.n)
    data = {"source": _name(subject), "generators": ideal.to_text(), "exponents": ideal.to_json()}
    return Output(data, "\n".join(ideal.to_text()))


def cmd_groebner(session: Session) -> Output:
    "Reduced Gröbner basis of the ideal and its comparison with the monomial ideal"
    subject = _subject(session.args, allow_cells=False)
    gens, expected = _generators(session, subject)
    cache = session.cache()
    basis = cache.groebner(gens, session.order, session.budget)
    log.info("Gröbner cache: %d hits, %d misses", cache.hits, cache.misses)
    data = basis.to_json()
    data["source"] = _name(subject)
    data["initial_matches"] = basis.initial_ideal() == expected
    return Output(data, "\n".join(basis.to_text()))


def cmd_dreams(session: Session) -> Output:
    "Pipe dreams of z (optionally inside --cells) or reduced pipe dreams of w"
    args = session.args
    subject = _subject(args)
    perm = _need_perm(subject, "dreams")
    if subject.kind == FPF:
        if subject.cells is not None:
            _check_staircase(subject.cells, subject.n)
        if args.extended:
            dreams = enumerate_fp_plus(perm, subject.n, subject.cells)
        else:
            dreams = enumerate_fp(perm, subject.n, subject.cells)
    else:
        if args.extended or subject.cells is not None:
            raise UsageError("--extended and --cells apply to involution pipe dreams only")
        dreams = enumerate_rp(perm, subject.m, subject.n)
    data = {"source": _name(subject), "count": len(dreams), "dreams": dreams_to_json(dreams)}
    text = "\n".join(_cells_text(dream) for dream in dreams)
    pictures = "\n\n".join(
        render_ascii(dream, subject.n, FPF if subject.kind == FPF else CLASSICAL, subject.m)
        for dream in dreams)
    return Output(data, text, pictures)


def cmd_complex(session: Session) -> Output:
    "Subword complex Σ(z,Q), Q given by --cells or the whole staircase"
    subject = _subject(session.args)
    z = _need_fpf(subject, "complex")
    region = subject.cells if subject.cells is not None else staircase(subject.n)
    complex_ = subword_complex(z, region, subject.n)
    decomposable, certificate = is_vertex_decomposable(complex_)
    extended = delta_fpf(reading_word(region)) == z
    if complex_.is_empty():
        kind = "empty"
    else:
        kind = "sphere" if extended else "ball"
    data = complex_.to_json()
    data.update({
        "z": str(z),
        "n": subject.n,
        "kind": kind,
        "vertex_decomposable": decomposable,
        "pivots": [list(p) for p in certificate.pivots()] if certificate else None,
    })
    text = _lines([("z", z), ("kind", kind), ("dimension", data["dimension"]),
                   ("euler", data["euler"]), ("vertex_decomposable", decomposable)] +
                  [("facet", _cells_text(f)) for f in complex_.sorted_facets()] +
                  [("minimal_nonface", _cells_text(f)) for f in complex_.minimal_nonfaces()])
    return Output(data, text)


def cmd_kpoly(session: Session) -> Output:
    "Symplectic Grothendieck polynomial through the selected route"
    args = session.args
    subject = _subject(args, allow_cells=False)
    z = _need_fpf(subject, "kpoly")
    routes: Dict[str, Callable] = {
        "kpoly": groth_sp_kpoly,
        "dreams": groth_sp_dreams,
        "inclusion-exclusion": groth_sp_inclusion_exclusion,
        "dominant": groth_sp_dominant,
    }
    poly = routes[args.route](z, subject.n)
    text = kpoly_to_text(poly)
    data: Dict[str, Any] = kpoly_to_json(poly)
    data.update({
        "z": str(z),
        "n": subject.n,
        "route": args.route,
        "text": text,
        "value_at_one": evaluate_at_one(poly),
        "lowest_x_degree": lowest_x_degree(poly),
        "beta": str(beta_transform(poly, fpf_length(z))),
    })
    return Output(data, text)


def cmd_decompose(session: Session) -> Output:
    "Intersection of the variable ideals of all pipe dreams against J^ss_z or J_w"
    subject = _subject(session.args, allow_cells=False)
    perm = _need_perm(subject, "decompose")
    if subject.kind == FPF:
        dreams = enumerate_fp(perm, subject.n)
        expected = ssj_generators(perm, subject.n)
        space = SKEW
    else:
        dreams = enumerate_rp(perm, subject.m, subject.n)
        _, expected = classical_generators(perm, subject.m, subject.n)
        space = GENERAL
    intersection = intersect_all([MonomialIdeal.from_cells(d.cells, space) for d in dreams], space)
    matches = intersection == expected
    data = {
        "source": _name(subject),
        "components": dreams_to_json(dreams),
        "intersection": intersection.to_text(),
        "monomial_ideal": expected.to_text(),
        "matches": matches,
    }
    text = "\n".join(["(" + ", ".join(f"u[{i},{j}]" for i, j in d.cells) + ")" for d in dreams] +
                     [f"matches: {matches}"])
    error = None
    if not matches:
        error = VerificationError(f"Pipe dream decomposition of {_name(subject)} does not match")
    return Output(data, text, error=error)


def _suite_options(session: Session) -> SuiteOptions:
    args = session.args
    conf = session.conf
    return SuiteOptions(n=args.n or 0,
                        m=args.m,
                        seed=session.seed,
                        exhaustive=args.exhaustive or conf.verify.exhaustive,
                        sample=conf.verify.sample,
                        cap=conf.verify.cap,
                        budget=session.budget,
                        order=session.order.name,
                        cache_dir=session.cache_dir,
                        cache_enabled=session.cache_enabled,
                        paranoid=conf.cache.paranoid,
                        essential_only=args.essential_only)


def _verification_error(reports: Sequence[VerificationReport]) -> Optional[PfaffschubError]:
    failed = [report for report in reports if not report.ok]
    if not failed:
        return None
    if all(report.budget_exceeded for report in failed):
        return BudgetError("verification instances", failed[0].options.budget.pairs)
    names = ", ".join(report.suite for report in failed)
    count = sum(len(report.failed) for report in failed)
    return VerificationError(f"{count} failing instance(s) in {names}")


def cmd_verify(session: Session) -> Output:
    "Run verification suites or replay one stored instance"
    args = session.args
    options = _suite_options(session)
    if args.replay:
        reports = [replay(args.replay, options)]
    else:
        if not args.suite:
            raise UsageError("--suite or --replay is required")
        if args.n is None:
            raise UsageError("--n is required for verification suites")
        names = list(SUITES) if "all" in args.suite else list(dict.fromkeys(args.suite))
        reports = [run_suite(name, options, session.jobs) for name in names]
        for report in reports:
            if not report.ok:
                write_replays(report, args.replay_dir)
    data = {"reports": [report.to_json() for report in reports]}
    table = summary_table(reports)
    return Output(data, table, error=_verification_error(reports))


def cmd_render(session: Session) -> Output:
    "ASCII pictures of diagrams, dominant components and pipe dreams"
    subject = _subject(session.args)
    pictures: List[Tuple[str, str]] = []
    if subject.perm is None:
        flavor = FPF if subject.kind == FPF else CLASSICAL
        pictures.append(("cells",
                         render_ascii(subject.cells or (), subject.n, flavor, subject.m)))
    elif subject.kind == FPF:
        z = subject.perm
        n = subject.n
        dom, _ = dominant_component(z)
        pictures.append(("D^ss(z)", render_ascii(ss_rothe_diagram(z), n, FPF)))
        pictures.append(("dom(z)", render_ascii(dom, n, CLASSICAL)))
        for pos, dream in enumerate(enumerate_fp(z, n), 1):
            pictures.append((f"dream {pos}", render_ascii(dream, n, FPF)))
    else:
        w = subject.perm
        pictures.append(("D(w)", render_ascii(rothe_diagram(w), subject.n, CLASSICAL, subject.m)))
        for pos, dream in enumerate(enumerate_rp(w, subject.m, subject.n), 1):
            pictures.append(
                (f"dream {pos}", render_ascii(dream, subject.n, CLASSICAL, subject.m)))
    data = {
        "source": _name(subject),
        "pictures": [{
            "title": title,
            "rows": picture.split("\n")
        } for title, picture in pictures],
    }
    text = "\n\n".join(f"{title}\n{picture}" for title, picture in pictures)
    return Output(data, text, text)


SUBJECT_OPTS: List[List[OptionDef]] = [
    [
        (["--fpf"],
         dict(metavar="CYCLES",
              help="Fixed-point-free involution by its 2-cycles, e.g. '(1,2)(3,6)(4,5)'")),
        (["--inv"], dict(metavar="CYCLES", help="Involution of [n] to be standardized by FPF_n")),
        (["--perm"],
         dict(metavar="ONE_LINE", help="Permutation in one-line notation, e.g. '2 1 4 3'")),
    ],
]

WINDOW_OPTS: List[OptionDef] = [
    (["--n"], dict(type=_positive_int, help="Window size n (columns for permutations)")),
    (["--m"], dict(type=_positive_int, help="Number of rows for permutations, defaults to n")),
]

CELLS_OPTS: List[OptionDef] = [
    (["--cells"], dict(metavar="R,C;R,C", help="Set of cells, e.g. '3,1;4,2'")),
    (["--classical"],
     dict(action="store_true", help="Treat --cells as general matrix positions")),
]

COMMANDS: Dict[str, Tuple[str, Callable[[Session], Output], List[OptionDef], bool]] = {
    "diagram": ("Show Rothe diagram, essential set and dominant component", cmd_diagram, [],
                True),
    "rank-table": ("Show the rank table of a permutation or a monomial", cmd_rank_table, [
        (["--greene"],
         dict(action="store_true", help="Also compute the table by longest chains")),
    ], True),
    "ideal": ("List generators of I^ss_z or I_w", cmd_ideal, [], True),
    "monomial-ideal": ("List minimal generators of J^ss_z or J_w", cmd_monomial_ideal, [], True),
    "groebner": ("Compute the reduced Gröbner basis", cmd_groebner, [], True),
    "dreams": ("Enumerate pipe dreams", cmd_dreams, [
        (["--extended"], dict(action="store_true", help="Enumerate extended pipe dreams")),
    ], True),
    "complex": ("Describe the subword complex", cmd_complex, [], True),
    "kpoly": ("Compute the symplectic Grothendieck polynomial", cmd_kpoly, [
        (["--route"],
         dict(choices=ROUTES, default="kpoly", help="Computation route (default: kpoly)")),
    ], True),
    "decompose": ("Check the pipe dream decomposition of the monomial ideal", cmd_decompose, [],
                  True),
    "verify": ("Run verification suites", cmd_verify, [
        (["--suite"],
         dict(action="append",
              choices=list(SUITES) + ["all"],
              help="Suite to run, may be repeated; 'all' runs every suite")),
        (["--exhaustive"], dict(action="store_true", help="Disable sampling at the cap")),
        (["--replay"], dict(metavar="FILE", help="Re-run the instance stored in a replay file")),
        (["--replay-dir"],
         dict(metavar="DIR", default=".", help="Where replay files of failures are written")),
    ], False),
    "render": ("Draw diagrams and pipe dreams as ASCII", cmd_render, [], True),
}


def _prepre_shared_opts(subparsers,
                        name: str,
                        description: str,
                        additional_opts: List[OptionDef] = None,
                        exclusive_opts: List[List[OptionDef]] = None):

    parser = subparsers.add_parser(name, description=description, help=description)
    parser.add_argument("-v", "--verbose", action="store_true", help="Enable verbose output")
    parser.add_argument("--config", metavar="FILE", help="YAML configuration file")
    parser.add_argument("--format", choices=FORMATS, default="json", help="Output format")
    parser.add_argument("--order",
                        choices=sorted(TERM_ORDERS),
                        default=REVLEX.name,
                        help="Term order (default: revlex)")
    parser.add_argument("--essential-only",
                        action="store_true",
                        help="Use only the essential-set rank conditions for I^ss_z")
    parser.add_argument("--pfaffian-basis",
                        action="store_true",
                        help="Use the f_AB Pfaffians instead of the defining generators")
    parser.add_argument("--no-cache", action="store_true", help="Don't use the Gröbner cache")
    parser.add_argument("--cache-dir", metavar="DIR", help="Gröbner cache directory")
    parser.add_argument("--budget-pairs",
                        type=_positive_int,
                        help="Maximal number of Buchberger pairs")
    parser.add_argument("--jobs", type=_positive_int, help="Number of worker processes")
    parser.add_argument("--seed", type=int, help="Seed for sampled instances")

    if additional_opts:
        for option_args, option_kwargs in additional_opts:
            parser.add_argument(*option_args, **option_kwargs)
    if exclusive_opts:
        for exclusive_set in exclusive_opts:
            group = parser.add_mutually_exclusive_group()
            for option_args, option_kwargs in exclusive_set:
                group.add_argument(*option_args, **option_kwargs)

    return parser


def prepare_parser() -> argparse.ArgumentParser:
    "Build the command line parser with every subcommand"
    parser = argparse.ArgumentParser(
        prog="pfaffschub",
        description="Gröbner geometry of skew-symmetric matrix Schubert varieties")
    parser.add_argument("--version", action="version", version=f"pfaffschub {get_version()}")
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    for name, (description, handler, options, takes_subject) in COMMANDS.items():
        additional = WINDOW_OPTS + options
        exclusive = None
        if takes_subject:
            additional = additional + CELLS_OPTS
            exclusive = SUBJECT_OPTS
        sub = _prepre_shared_opts(subparsers, name, description, additional, exclusive)
        if not takes_subject:
            sub.set_defaults(fpf=None, inv=None, perm=None, cells=None, classical=False)
        sub.set_defaults(handler=handler)
    return parser


def _emit(output: Output, fmt: str):
    if fmt == "json":
        print(json.dumps(output.data, indent=2, sort_keys=True))
    elif fmt == "ascii" and output.ascii is not None:
        print(output.ascii)
    else:
        print(output.text)


def run(argv: Optional[Sequence[str]] = None) -> int:
    "Run one command and return the process exit code"
    parser = prepare_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else 2

    loglevel = logging.INFO
    if args.verbose:
        loglevel = logging.DEBUG
    logging.basicConfig(level=loglevel, format="[%(levelname)s] %(message)s")

    try:
        conf = load_config(args.config)
        conf.check_version(get_version())
        output = args.handler(Session(args, conf))
        _emit(output, args.format)
        if output.error is not None:
            raise output.error
    except PfaffschubError as err:
        log.error("%s", err)
        return err.exit_code
    return 0


def pfaffschub_entry():
    """Console entry point for pfaffschub"""
    sys.exit(run())
