"""Full-pipeline report: one JSON-ready dict per input, plus a plain-text rendering."""
from __future__ import annotations

import hashlib
from concurrent.futures import ThreadPoolExecutor

from .algebra import MonomialAlgebra, center, format_element
from .chains import TailAutomaton, chains, classify_stacked, proj_dim_simple
from .hochschild import HHPresentation, cocycle_support, find_generators
from .homology import fg2_factorization_probe, gorenstein_probe
from .varieties import check_all_nontrivial_implies_A1, classify_simples, fg_consequence_report

SCHEMA = 1


def _map(fn, items, parallel: bool):
    items = list(items)
    if not parallel or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor() as pool:
        return list(pool.map(fn, items))


def verdict_json(v) -> dict:
    out = {"is_stacked": v.is_stacked, "D": v.D, "A": v.A, "d": v.d, "reason": v.reason,
           "finite_global_dimension": v.finite_global_dimension}
    if v.counterexample is not None:
        out["counterexample"] = {"degree": v.counterexample.degree, "path": str(v.counterexample)}
    if v.max_chain_degree is not None:
        out["max_chain_degree"] = v.max_chain_degree
    if v.flags:
        out["flags"] = v.flags
    return out


def presentation_json(alg: MonomialAlgebra, pres: HHPresentation) -> dict:
    gens = []
    for g in pres.generators:
        support = cocycle_support(alg, g, pres.d)
        gens.append({
            "index": g.index,
            "kind": g.kind,
            "degree": g.degree,
            "base_vertices": sorted(set(g.base_vertices), key=alg.quiver.vertex_index.get),
            "source": str(g.C) if g.kind == "closed-path" else [str(s) for s in g.segments],
            "support_chains": {str(c): f"e_{v}" for c, v in support.items()},
        })
    return {"presentation": pres.describe(), "r": pres.r, "u": pres.u, "generators": gens, "notes": pres.notes}


def center_json(alg: MonomialAlgebra) -> dict:
    z = center(alg)
    return {
        "dimension": z.k_dimension,
        "identity_components": z.identity_count,
        "radical_generators": [format_element(e) for e in z.generator_elements[z.identity_count:]],
        "nilpotency": {format_element(z.generator_elements[i]): k for i, k in sorted(z.nilpotency.items())},
    }


def build_report(alg: MonomialAlgebra, source_text: str, filename: str, n_max: int = 20, parallel: bool = False) -> dict:
    aut = TailAutomaton(alg)
    verdict = classify_stacked(alg, aut)
    names = alg.quiver.vertices
    pds = dict(zip(names, _map(lambda v: proj_dim_simple(alg, v, aut), names, parallel)))
    rep: dict = {
        "schema": SCHEMA,
        "input": {
            "file": filename,
            "sha256": hashlib.sha256(source_text.encode()).hexdigest(),
            "name": alg.name,
            "assumption": alg.field_note,
        },
        "validation": {"ok": True, "dimension": alg.dimension, "warnings": list(alg.warnings)},
        "stacked": verdict_json(verdict),
    }
    if verdict.is_stacked:
        pres = find_generators(alg, verdict)
        reports = classify_simples(alg, pres)
        rep["hochschild"] = presentation_json(alg, pres)
        rep["varieties"] = {r.vertex: r.to_json() for r in reports}
        rep["all_nontrivial_implies_A1"] = str(check_all_nontrivial_implies_A1(alg, verdict, reports))
        rep["fg_consistency"] = {
            f.vertex: {"consistent": f.consistent, "note": f.note} for f in fg_consequence_report(reports, pds)
        }
        rep["fg2_probe"] = fg2_factorization_probe(alg, pres).to_json()
    else:
        rep["hochschild"] = None
        rep["varieties"] = None
    gor = gorenstein_probe(alg, n_max)
    rep["homology"] = {
        "pd_simples": {v: pd.to_json() for v, pd in pds.items()},
        "injective_dimension": {"left": gor.left.to_json(), "right": gor.right.to_json()},
        "gorenstein": gor.flag,
    }
    rep["center"] = center_json(alg)
    rep["candidate_H"] = "candidate only: Z(Lambda) together with the polynomial part of HH*/N"
    return rep


def _dim_text(d: dict) -> str:
    if d["kind"] == "finite":
        return str(d["value"])
    if d["kind"] == "at-least":
        return f">= {d['value']}"
    return "infinite"


def render_text(rep: dict) -> str:
    lines = [f"algebra {rep['input']['name']} ({rep['input']['file']})", f"  {rep['input']['assumption']}"]
    lines.append(f"dimension: {rep['validation']['dimension']}")
    lines += [f"warning: {w}" for w in rep["validation"]["warnings"]]
    st = rep["stacked"]
    if st["is_stacked"]:
        lines.append(f"stacked: yes, D={st['D']} A={st['A']} d={st['d']}")
    else:
        lines.append(f"stacked: no ({st['reason']})")
    lines += [f"  {f}" for f in st.get("flags", [])]
    hh = rep["hochschild"]
    if hh is not None:
        lines.append(f"HH*/N: {hh['presentation']}")
        for g in hh["generators"]:
            src = g["source"] if isinstance(g["source"], str) else " | ".join(g["source"])
            lines.append(f"  x{g['index']}: {g['kind']} [{src}] degree {g['degree']}")
        lines += [f"  note: {n}" for n in hh["notes"]]
        lines.append("varieties:")
        for v, r in rep["varieties"].items():
            wit = ", ".join(f"x{i}" for i in r["witnesses"]) or "-"
            lines.append(f"  S_{v}: {r['status']:<10} witnesses {wit}")
        lines.append(f"all simples nontrivial => A = 1: {rep['all_nontrivial_implies_A1']}")
    h = rep["homology"]
    lines.append("pd of simples:")
    for v, d in h["pd_simples"].items():
        extra = ""
        if rep.get("fg_consistency"):
            extra = "" if rep["fg_consistency"][v]["consistent"] else f"  ({rep['fg_consistency'][v]['note']})"
        lines.append(f"  S_{v}: {_dim_text(d)}{extra}")
    inj = h["injective_dimension"]
    lines.append(f"injective dimension: left {_dim_text(inj['left'])}, right {_dim_text(inj['right'])}")
    lines.append(f"gorenstein: {h['gorenstein']}")
    if rep.get("fg2_probe"):
        fg = rep["fg2_probe"]
        lines.append(f"fg2 probe on {fg['window'][0]}..{fg['window'][1]}: {fg['verdict']} ({fg['caveat']})")
    c = rep["center"]
    lines.append(f"center: dimension {c['dimension']}")
    lines += [f"  {g}" for g in c["radical_generators"]]
    if "timing" in rep:
        lines.append(f"timing: {rep['timing']:.3f}s")
    return "\n".join(lines) + "\n"


def chain_listing(alg: MonomialAlgebra, n_max: int) -> dict[int, list[str]]:
    return {n: [str(c) for c in cs] for n, cs in chains(alg, n_max).items()}


__all__ = ["SCHEMA", "build_report", "render_text", "verdict_json", "presentation_json", "center_json",
           "chain_listing"]
