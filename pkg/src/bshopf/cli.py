"""Command line front end: ``bshopf <command> [options] <input-file>``.

Exit codes: 0 ok, 1 input error, 2 size guard exceeded, 3 internal
cross-check failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import cdindex as cdmod
from .chromatic import (PSI_LIMIT, SUBSET_LIMIT, chromatic_polynomial,
                        chromatic_polynomial_subsets, psi_monomial,
                        psi_powersum_subsets)
from .core import (BuildingSet, SetFamily, bits, closure, minimal_generators)
from .errors import CrossCheckError, GuardError, InputError, guard
from .eulerian import (BAYER_BILLERA_LIMIT, EULERIAN_LIMIT, bayer_billera_check,
                       dehn_sommerville_check, is_eulerian,
                       is_eulerian_geometric, multinomial_identity_check,
                       zeta_inverse)
from .graphs import (BETA_LIMIT, ORIENTATION_LIMIT, SimpleGraph, beta_n,
                     graphical, orientation_counts, tutte)
from .symfunc import specialize

COMMANDS = ("closure", "chi", "csf", "zetainv", "eulerian", "cdindex",
            "tutte", "beta", "selftest")
EXIT_OK, EXIT_INPUT, EXIT_GUARD, EXIT_CHECK = 0, 1, 2, 3

# printed cd-indices of D_2..D_5
PHI_FIXTURES = {
    2: {"c": 1},
    3: {"cc": 1, "d": 1},
    4: {"ccc": 1, "cd": 2, "dc": 2},
    5: {"cccc": 1, "ccd": 3, "dcc": 3, "cdc": 5, "dd": 4},
}


@dataclass
class JobSpec:
    command: str
    input: str | None = None
    basis: str = "monomial"
    n: int | None = None
    m_range: tuple[int, int] | None = None
    format: str = "json"
    options: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def _names(raw, what: str) -> list[str]:
    if not isinstance(raw, list) or not all(isinstance(x, (str, int)) for x in raw):
        raise InputError(f"malformed document: {what} must be a list of names")
    names = [str(x) for x in raw]
    seen = set()
    for x in names:
        if x in seen:
            raise InputError(f"duplicate name {x!r} in {what}")
        seen.add(x)
    return names


def _index(names: list[str], x) -> int:
    try:
        return names.index(str(x))
    except ValueError:
        raise InputError(f"unknown name {str(x)!r}") from None


def _parse_lines(doc: str) -> SimpleGraph:
    names: list[str] = []
    edges = []
    for lineno, line in enumerate(doc.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) > 2:
            raise InputError(f"line {lineno}: expected 'u v' or a single vertex")
        for t in toks:
            if t not in names:
                names.append(t)
        if len(toks) == 2:
            if toks[0] == toks[1]:
                raise InputError(f"line {lineno}: loop at {toks[0]!r}")
            edges.append((names.index(toks[0]), names.index(toks[1])))
    return SimpleGraph.from_edges(len(names), edges, names)


def parse_input(doc: str) -> BuildingSet | SimpleGraph:
    """Parse a building-set or graph document (JSON, or edge-list lines)."""
    try:
        data = json.loads(doc)
    except json.JSONDecodeError:
        if doc.lstrip().startswith(("{", "[")):
            raise InputError("malformed document: invalid JSON") from None
        return _parse_lines(doc)
    if not isinstance(data, dict):
        raise InputError("malformed document: expected a JSON object")
    if "ground_set" in data:
        names = _names(data["ground_set"], "ground_set")
        gens_raw = data.get("generators", [])
        if not isinstance(gens_raw, list):
            raise InputError("malformed document: generators must be a list")
        gens = []
        for g in gens_raw:
            if not isinstance(g, list):
                raise InputError("malformed document: each generator must be a list")
            idx = {_index(names, x) for x in g}
            if len(idx) < 2:
                raise InputError("generator must have ≥ 2 elements")
            gens.append(idx)
        guard("ground set size", len(names), 64)
        return closure(SetFamily.from_sets(len(names), gens), names)
    if "vertices" in data:
        names = _names(data["vertices"], "vertices")
        edges = []
        for e in data.get("edges", []):
            if not isinstance(e, list) or len(e) != 2:
                raise InputError("malformed document: each edge must be a pair")
            u, w = _index(names, e[0]), _index(names, e[1])
            if u == w:
                raise InputError(f"loop at {names[u]!r}")
            edges.append((u, w))
        return SimpleGraph.from_edges(len(names), edges, names)
    raise InputError("malformed document: expected 'ground_set' or 'vertices'")


def parse_range(text: str) -> tuple[int, int]:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise InputError(f"bad --m-range {text!r}; expected A..B") from None
    if lo > hi:
        raise InputError(f"empty --m-range {text!r}")
    return lo, hi


# ---------------------------------------------------------------------------
# serialisation
# ---------------------------------------------------------------------------

def _label_set(b: BuildingSet, mask: int) -> list[str]:
    return [b.label(i) for i in bits(mask)]


def building_set_document(b: BuildingSet) -> dict:
    gens, gmin = minimal_generators(b)
    return {
        "ground_set": [b.label(i) for i in range(b.n)],
        "generators": [_label_set(b, m) for m in gens],
        "minimal_generators": [_label_set(b, m) for m in gmin],
        "members": [_label_set(b, m) for m in b.members],
    }


def _terms(x) -> list:
    return [[list(k), v] for k, v in x.items()]


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _as_building_set(obj) -> BuildingSet:
    return graphical(obj) if isinstance(obj, SimpleGraph) else obj


def _as_graph(obj, command: str) -> SimpleGraph:
    if not isinstance(obj, SimpleGraph):
        raise InputError(f"{command} needs a graph document")
    return obj


def _cmd_closure(obj, spec):
    return building_set_document(_as_building_set(obj))


def _cmd_chi(obj, spec):
    b = _as_building_set(obj)
    guard("rank for chi", b.n, PSI_LIMIT)
    p = chromatic_polynomial(b)
    if len(b.c_min) <= SUBSET_LIMIT and p != chromatic_polynomial_subsets(b):
        raise CrossCheckError("chromatic polynomial routes disagree")
    doc = {"rank": b.n, "coefficients": list(p.coeffs) or [0]}
    if spec.m_range:
        lo, hi = spec.m_range
        doc["values"] = [[m, p(m)] for m in range(lo, hi + 1)]
    return doc


def _cmd_csf(obj, spec):
    b = _as_building_set(obj)
    if spec.basis == "monomial":
        guard("rank for the monomial expansion", b.n, PSI_LIMIT)
        x = psi_monomial(b)
    else:
        guard("number of minimal generators", len(b.c_min), SUBSET_LIMIT)
        x = psi_powersum_subsets(b)
    doc = {"basis": spec.basis, "rank": b.n, "terms": _terms(x)}
    if spec.m_range:
        lo, hi = spec.m_range
        doc["specializations"] = [[m, specialize(x, m)] for m in range(lo, hi + 1)]
    return doc


def _cmd_zetainv(obj, spec):
    b = _as_building_set(obj)
    if b.n > PSI_LIMIT and len(b.c_min) > SUBSET_LIMIT:
        guard("rank for zeta inverse", b.n, PSI_LIMIT)
    r = zeta_inverse(b)
    return {"zeta_inverse": r.zeta_inv, "conjugate": r.conjugate,
            "routes": {k: v for k, v in r.routes.items()}}


def _cmd_eulerian(obj, spec):
    b = _as_building_set(obj)
    guard("rank for eulerian detection", b.n, EULERIAN_LIMIT)
    detectors = {
        "definition": is_eulerian(b),
        "dehn_sommerville": dehn_sommerville_check(b),
        "geometric": is_eulerian_geometric(b),
    }
    if len(set(detectors.values())) != 1:
        raise CrossCheckError(f"eulerian detectors disagree: {detectors}")
    doc = {"eulerian": detectors["definition"], "detectors": detectors}
    if b.n <= BAYER_BILLERA_LIMIT:
        doc["violated_relations"] = [
            {"alpha": list(v.alpha), "position": v.position, "value": v.value}
            for v in bayer_billera_check(b)]
    else:
        doc["violated_relations"] = None
    return doc


def _cmd_cdindex(obj, spec):
    b = _as_building_set(obj)
    guard("rank for the cd-index", b.n, PSI_LIMIT)
    phi = cdmod.cd_index(b)
    return {"rank": b.n, "cd_index": {w: v for w, v in phi.items()},
            "ab_index": {w: v for w, v in cdmod.ab_index(b).items()}}


def _cmd_tutte(obj, spec):
    g = _as_graph(obj, "tutte")
    guard("edge count for tutte", len(g.edges), ORIENTATION_LIMIT)
    t = tutte(g)
    acyclic, cyclic = orientation_counts(g)
    return {"tutte": [[i, j, c] for (i, j), c in t.items()],
            "T(2,0)": t(2, 0), "T(0,2)": t(0, 2),
            "acyclic_orientations": acyclic, "totally_cyclic_orientations": cyclic}


def _cmd_beta(obj, spec):
    g = _as_graph(obj, "beta")
    if spec.n is None or spec.n < 2:
        raise InputError("beta needs --n K with K >= 2")
    guard("rank of beta_n", g.v + (spec.n - 2) * len(g.edges), BETA_LIMIT)
    if g.labels is None:
        g = SimpleGraph(g.v, g.edges, tuple(map(str, range(g.v))))
    return building_set_document(beta_n(g, spec.n))


def selftest() -> tuple[bool, dict]:
    results = {}
    for n in range(1, 11):
        results[f"multinomial_identity[{n}]"] = multinomial_identity_check(n)
    from .core import discrete
    for n, expect in PHI_FIXTURES.items():
        got = {w: v for w, v in cdmod.andre_phi(n).items()}
        via = {w: v for w, v in cdmod.cd_index(discrete(n)).items()}
        results[f"phi[{n}]"] = got == expect == via
    return all(results.values()), results


HANDLERS = {
    "closure": _cmd_closure, "chi": _cmd_chi, "csf": _cmd_csf,
    "zetainv": _cmd_zetainv, "eulerian": _cmd_eulerian, "cdindex": _cmd_cdindex,
    "tutte": _cmd_tutte, "beta": _cmd_beta,
}


def _render_text(doc: dict) -> str:
    lines = []
    for k in sorted(doc):
        v = doc[k]
        if isinstance(v, list) and v and isinstance(v[0], list):
            lines.append(f"{k}:")
            lines.extend(f"  {json.dumps(row, ensure_ascii=False)}" for row in v)
        elif isinstance(v, dict):
            lines.append(f"{k}:")
            lines.extend(f"  {kk:<20} {json.dumps(vv, ensure_ascii=False)}"
                         for kk, vv in sorted(v.items()))
        else:
            lines.append(f"{k}: {json.dumps(v, ensure_ascii=False)}")
    return "\n".join(lines) + "\n"


def emit(doc: dict, fmt: str, out) -> None:
    if fmt == "text":
        out.write(_render_text(doc))
    else:
        out.write(json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n")


def run(spec: JobSpec, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        if spec.command == "selftest":
            ok, results = selftest()
            emit({"command": "selftest", "ok": ok, "results": results}, spec.format, out)
            return EXIT_OK if ok else EXIT_CHECK
        if spec.command not in HANDLERS:
            raise InputError(f"unknown command {spec.command!r}")
        if spec.input is None:
            raise InputError("missing input file")
        if spec.input == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(spec.input, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise InputError(f"cannot read {spec.input}: {exc.strerror}") from None
        obj = parse_input(text)
        doc = {"command": spec.command, **HANDLERS[spec.command](obj, spec)}
        emit(doc, spec.format, out)
        return EXIT_OK
    except InputError as exc:
        err.write(f"input error: {exc}\n")
        return EXIT_INPUT
    except GuardError as exc:
        err.write(f"guard exceeded: {exc}\n")
        return EXIT_GUARD
    except CrossCheckError as exc:
        err.write(f"internal check failed: {exc}\n")
        return EXIT_CHECK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage errors are input errors, not guard failures
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bshopf", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", nargs="?", help="input file, or - for standard input")
    p.add_argument("--basis", choices=("monomial", "powersum"), default="monomial")
    p.add_argument("--n", type=int, help="parameter of beta_n")
    p.add_argument("--m-range", help="A..B values of m to evaluate")
    p.add_argument("--format", choices=("json", "text"), default="json")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_intermixed_args(argv)
    try:
        m_range = parse_range(args.m_range) if args.m_range else None
    except InputError as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EXIT_INPUT
    spec = JobSpec(args.command, args.input, args.basis, args.n, m_range, args.format)
    return run(spec)


if __name__ == "__main__":
    sys.exit(main())
