"""Command line front end: ``tessella <subcommand> ...``.

Exit codes: 0 success (or the verdict the construction predicts), 1 invalid
input, 2 inconclusive because a budget ran out, 3 a claim was contradicted
or an internal invariant failed.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys

from . import io as patch_io
from .aperiodicity import CONTRADICTION, MONOTYPE, monotile_forcing, periodicity_contradiction, incidence_census
from .cyclic import CyclicType, classify, format_word, parse_word
from .families import DEFAULT_EVENS, EvenSizes, ka, kbar, kn, kn_instance, kn_prime, kn_prime_instance
from .geometry import dual_tile
from .heesch import INCONCLUSIVE, BuildError, constructive_build, forced_chain_verify, heesch_number
from .patch import validate_patch
from .render import RenderSpec, render_svg
from .unit_fractions import verify_lemmas

OK, INVALID, INCONCLUSIVE_EXIT, VIOLATION = 0, 1, 2, 3

_FAMILY_RE = re.compile(r"^\s*(kn|knprime|kn_prime|knp|kbar|ka)\s*\(\s*([\d,\s]+)\)\s*$")


class UsageError(ValueError):
    pass


def parse_type(text: str) -> CyclicType:
    """``[4,5,4,5]``, ``4,5,4,5`` or a family expression such as ``kn(2)`` or ``ka(7,11,13)``."""
    text = text.strip()
    if text.startswith("<") and text.endswith(">"):
        text = text[1:-1]
    m = _FAMILY_RE.match(text)
    if m:
        name = m.group(1)
        args = [int(x) for x in m.group(2).split(",") if x.strip()]
        builders = {"kn": (kn, 1), "knprime": (kn_prime, 1), "kn_prime": (kn_prime, 1),
                    "knp": (kn_prime, 1), "kbar": (kbar, 1), "ka": (ka, 3)}
        fn, arity = builders[name]
        if len(args) != arity:
            raise UsageError(f"{name} takes {arity} argument(s), got {len(args)}")
        return fn(*args)
    if text and text[0].isdigit():
        text = f"[{text}]"
    return CyclicType(parse_word(text))


def _family_instance(name: str, n: int):
    if name == "kn":
        return kn_instance(n)
    if name in ("knprime", "kn_prime", "knp"):
        return kn_prime_instance(n)
    raise UsageError(f"family must be kn or knprime, got {name!r}")


class Reporter:
    def __init__(self, fmt: str):
        self.json = fmt == "json"
        self.data: dict = {}

    def line(self, text: str) -> None:
        if not self.json:
            print(text)

    def set(self, **kw) -> None:
        self.data.update(kw)

    def finish(self) -> None:
        if self.json:
            print(json.dumps(self.data, sort_keys=True, indent=1))


def _str_keys(d: dict) -> dict:
    return {format_word(k) if isinstance(k, tuple) else str(k): v for k, v in d.items()}


# ----------------------------------------------------------------------
# subcommands

def cmd_classify(a, out: Reporter) -> int:
    t = parse_type(a.type)
    g = classify(t)
    s = t.angle_sum
    out.line(f"{g.value} {s}")
    out.set(type=list(t.entries), canonical=list(t.canonical), geometry=g.value,
            angle_sum=str(s))
    return OK


def cmd_family(a, out: Reporter) -> int:
    if a.name == "ka":
        if not a.klm:
            raise UsageError("ka needs --klm K,L,M")
        k, l, m = (int(x) for x in a.klm.split(","))
        t = ka(k, l, m)
    else:
        if a.n is None:
            raise UsageError(f"{a.name} needs --n")
        if a.name in ("knp", "knprime"):
            if a.evens != "auto":
                raise UsageError("knp places its even sizes on doubled primes; --evens does not apply")
            t = kn_prime(a.n)
        else:
            t = {"kn": kn, "kbar": kbar}[a.name](a.n, _parse_evens(a.evens))
    out.line(str(t))
    out.set(family=a.name, type=list(t.entries), degree=len(t), angle_sum=str(t.angle_sum))
    return OK


def _parse_evens(text: str):
    """``auto`` for k_l = 2l+6, else a comma list giving k_1, k_2, ..."""
    if text == "auto":
        return DEFAULT_EVENS
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--evens expects auto or a comma list of even sizes, got {text!r}") from None
    return EvenSizes.from_list(values)


def cmd_build(a, out: Reporter) -> int:
    if a.family:
        if a.n is None:
            raise UsageError("--family needs --n")
        target = _family_instance(a.family, a.n)
        layers = a.layers or a.n
    else:
        if not a.type or not a.layers:
            raise UsageError("build needs --family/--n or --type/--layers")
        target = parse_type(a.type)
        layers = a.layers
    try:
        p = constructive_build(target, layers, max_faces=a.max_faces)
    except BuildError as e:
        out.line(f"build failed: {e}")
        out.set(ok=False, error=str(e))
        return INCONCLUSIVE_EXIT
    problems = validate_patch(p)
    if a.out:
        patch_io.save(p, a.out)
    out.line(f"{p.completed_layers} layers, {p.n_faces} faces, {p.n_vertices} vertices, "
             f"boundary {p.boundary_len}" + (f" -> {a.out}" if a.out else ""))
    out.set(ok=not problems, layers=p.completed_layers, faces=p.n_faces,
            vertices=p.n_vertices, boundary=p.boundary_len, problems=problems[:10])
    return VIOLATION if problems else OK


def cmd_heesch(a, out: Reporter) -> int:
    t = parse_type(a.type)
    threads = a.threads
    budget = a.budget_nodes
    r = heesch_number(t, a.max_layers, budget_nodes=budget, budget_seconds=a.budget_seconds,
                      threads=threads, order=a.order)
    out.line(str(r))
    out.set(outcome=r.outcome, layers=r.layers, nodes=r.nodes, elapsed=round(r.elapsed, 3),
            dead_ends=_str_keys(r.dead_ends))
    if a.witness and r.witness is not None:
        patch_io.save(r.witness, a.witness)
    if a.certificate and r.certificate is not None:
        with open(a.certificate, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(json.dumps(r.certificate.as_dict(), sort_keys=True, indent=1) + "\n")
    if r.outcome == INCONCLUSIVE:
        return INCONCLUSIVE_EXIT
    return OK


def cmd_forced_chain(a, out: Reporter) -> int:
    inst = _family_instance(a.family, a.n)
    rep = forced_chain_verify(inst, a.n, budget_seconds=a.budget_seconds)
    for i, lv in enumerate(rep.levels):
        out.line(f"level {i} ({lv.size}-gon): {lv.partials} partial, {lv.extensions} extensions, "
                 f"F1 {lv.f1}, F2 {lv.f2}, blocked {lv.blocked}")
    if not rep.exhausted:
        out.line("inconclusive: time budget ran out")
    elif rep.holds:
        out.line("chain holds")
    else:
        out.line(f"chain fails at level {rep.failed_level}")
    out.set(**rep.as_dict())
    if not rep.exhausted:
        return INCONCLUSIVE_EXIT
    return OK if rep.holds else VIOLATION


def cmd_lemmas(a, out: Reporter) -> int:
    rep = verify_lemmas(a.max_prime, a.max_list_size)
    out.line("verified" if rep.verified else f"{len(rep.counterexamples)} counterexamples")
    out.set(verified=rep.verified, instances=rep.instances, solutions=rep.solutions,
            counterexamples=[str(c) for c in rep.counterexamples[:20]])
    return OK if rep.verified else VIOLATION


def cmd_aperiodicity(a, out: Reporter) -> int:
    if a.klm:
        k, l, m = (int(x) for x in a.klm.split(","))
        t = ka(k, l, m)
    elif a.type:
        t = parse_type(a.type)
    else:
        raise UsageError("aperiodicity needs --klm or --type")
    v = periodicity_contradiction(t)
    for s in v.arithmetic:
        out.line(s)
    out.line(f"{v.verdict} {v.ratio_text()}")
    out.set(type=list(t.entries), verdict=v.verdict, ratios=v.ratio_text(),
            triangle_profiles=_str_keys(v.triangle_profiles),
            pentagon_profiles=_str_keys(v.pentagon_profiles),
            pentagon_words=[list(w) for w in v.pentagon_words])
    if a.census:
        p = patch_io.load(a.census)
        for x, y in ((3, 5), (5, 3)):
            c = incidence_census(p, x, y)
            out.line(f"census {x}-gons vs {y}-gons: {c.faces} interior faces, profiles {dict(c.profiles)}")
            out.set(**{f"census_{x}_{y}": _str_keys(dict(c.profiles))})
    return OK if v.verdict == CONTRADICTION else VIOLATION


def cmd_forcing(a, out: Reporter) -> int:
    t = parse_type(a.type)
    r = monotile_forcing(t)
    out.line(f"{len(r.solutions)} corner solutions, {len(r.mixed)} mixed")
    for m in r.mixed:
        out.line(f"  {m.configuration.counts}: {'eliminated' if m.eliminated else 'survives'} ({m.reason})")
    for n in r.notes:
        out.line(f"  note: {n}")
    out.line(r.verdict)
    out.set(type=list(t.entries), verdict=r.verdict, solutions=[list(map(list, c.counts)) for c in r.solutions],
            mixed=[{"counts": list(map(list, m.configuration.counts)), "eliminated": m.eliminated,
                    "reason": m.reason} for m in r.mixed],
            min_side_gap=r.min_side_gap, notes=r.notes)
    return OK if r.verdict == MONOTYPE else VIOLATION


def cmd_dual(a, out: Reporter) -> int:
    t = parse_type(a.type)
    d = dual_tile(t)
    ratio = d.area / math.pi
    out.line(f"side length of the fan polygons {d.side_length:.12g}")
    out.line(f"area {d.area:.12g} = {ratio:.12g} pi (angle-sum excess {t.angle_sum - 2})")
    for (x, y), s in zip(d.side_sizes(), d.sides):
        out.line(f"  side {x}-{y}: {s:.12g}")
    out.set(type=list(t.entries), side_length=d.side_length, area=d.area,
            angles=list(d.angles), sides=list(d.sides))
    return OK


def cmd_render(a, out: Reporter) -> int:
    p = patch_io.load(a.patch)
    svg = render_svg(p, RenderSpec(size=a.size, geodesic=not a.chords))
    if a.out:
        with open(a.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
        out.line(f"{p.n_faces} faces -> {a.out}")
    else:
        sys.stdout.write(svg)
    out.set(faces=p.n_faces, out=a.out)
    return OK


# ----------------------------------------------------------------------

def _env_int(name: str) -> int | None:
    v = os.environ.get(name)
    if v is None or v == "":
        return None
    try:
        return int(v)
    except ValueError:
        raise UsageError(f"environment variable {name} must be an integer, got {v!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tessella", description="Heesch numbers of hyperbolic vertex types")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", help="spherical / euclidean / hyperbolic with exact angle-sum")
    s.add_argument("type")
    s.set_defaults(fn=cmd_classify)

    s = sub.add_parser("family", help="print a member of a tuple family")
    s.add_argument("name", choices=("kn", "knp", "knprime", "kbar", "ka"))
    s.add_argument("--n", type=int)
    s.add_argument("--evens", default="auto", help="auto (k_l = 2l+6) or k_1,k_2,... as a comma list")
    s.add_argument("--klm")
    s.set_defaults(fn=cmd_family)

    s = sub.add_parser("build", help="build a layered patch")
    s.add_argument("--family", choices=("kn", "knp", "knprime"))
    s.add_argument("--n", type=int)
    s.add_argument("--type")
    s.add_argument("--layers", type=int)
    s.add_argument("--max-faces", type=int, default=1_500_000)
    s.add_argument("--out")
    s.set_defaults(fn=cmd_build)

    s = sub.add_parser("heesch", help="Heesch number by exhaustive search")
    s.add_argument("--type", required=True)
    s.add_argument("--max-layers", type=int, required=True)
    s.add_argument("--budget-nodes", type=int)
    s.add_argument("--budget-seconds", type=float)
    s.add_argument("--threads", type=int)
    s.add_argument("--order", choices=("fewest", "clockwise"), default="fewest")
    s.add_argument("--witness")
    s.add_argument("--certificate")
    s.set_defaults(fn=cmd_heesch)

    s = sub.add_parser("forced-chain", help="follow odd faces outward from a pentagon")
    s.add_argument("--family", choices=("kn", "knp", "knprime"), default="kn")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--budget-seconds", type=float, default=300.0)
    s.set_defaults(fn=cmd_forced_chain)

    s = sub.add_parser("lemmas", help="check the prime reciprocal-sum statements")
    s.add_argument("--max-prime", type=int, default=97)
    s.add_argument("--max-list-size", type=int, default=3)
    s.set_defaults(fn=cmd_lemmas)

    s = sub.add_parser("aperiodicity", help="incidence-ratio obstruction for ka(k,l,m)")
    s.add_argument("--klm")
    s.add_argument("--type")
    s.add_argument("--census", help="patch JSON to take an interior incidence census of")
    s.set_defaults(fn=cmd_aperiodicity)

    s = sub.add_parser("forcing", help="corner forcing for the dual tile")
    s.add_argument("--type", required=True)
    s.set_defaults(fn=cmd_forcing)

    s = sub.add_parser("dual", help="dual tile measurements")
    s.add_argument("--type", required=True)
    s.set_defaults(fn=cmd_dual)

    s = sub.add_parser("render", help="draw a patch as SVG")
    s.add_argument("patch")
    s.add_argument("--out")
    s.add_argument("--size", type=int, default=1000)
    s.add_argument("--chords", action="store_true", help="straight chords instead of geodesic arcs")
    s.set_defaults(fn=cmd_render)
    return ap


def run_command(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as e:
        return INVALID if e.code else OK
    out = Reporter(a.format)
    try:
        if a.command == "heesch":
            if a.threads is None:
                a.threads = _env_int("TESSELLA_THREADS")
            if a.budget_nodes is None:
                a.budget_nodes = _env_int("TESSELLA_BUDGET_NODES")
        code = a.fn(a, out)
    except (UsageError, ValueError, TypeError, KeyError, patch_io.DecodeError, OSError) as e:
        msg = str(e.args[0]) if isinstance(e, KeyError) and e.args else str(e)
        if out.json:
            print(json.dumps({"error": msg}, sort_keys=True))
        else:
            print(f"error: {msg}", file=sys.stderr)
        return INVALID
    except Exception as e:  # an invariant broke inside the library
        if out.json:
            print(json.dumps({"error": f"internal: {e}"}, sort_keys=True))
        else:
            print(f"internal error: {e}", file=sys.stderr)
        return VIOLATION
    out.finish()
    return code


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
