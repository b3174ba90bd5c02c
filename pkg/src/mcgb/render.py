"""Text and JSON views of decomposition results.

Output order is deterministic: branches in creation order, every
polynomial list as produced by the engine (bases ascending by leading
monomial, universal bases in their extraction order).
"""

import json


def problem_text(problem):
    """Canonical problem file text; parses back to an equal ProblemFile."""
    lines = []
    if problem.parameters:
        lines.append("parameters: %s;" % ", ".join(problem.parameters))
    lines.append("variables: %s;" % ", ".join(problem.variables))
    lines.append("order: %s, %s;" % (problem.x_order, problem.u_order))
    lines.append("ideal: %s;" % ", ".join(str(p) for p in problem.ideal))
    if problem.equals:
        lines.append("equals: %s;" % ", ".join(str(p) for p in problem.equals))
    if problem.nonzero:
        lines.append("nonzero: %s;" % ", ".join(str(p) for p in problem.nonzero))
    return "\n".join(lines) + "\n"


def _xmono_str(ring, xm):
    parts = []
    for n, e in zip(ring.variables, xm):
        if e == 1:
            parts.append(n)
        elif e > 1:
            parts.append(f"{n}^{e}")
    return "*".join(parts) or "1"


def summary_line(cgb_size, mcgb_size):
    """One-line size comparison; the percentage is relative to the
    minimal basis, so removing half of a doubled basis reads 100%."""
    pct = round(100 * (cgb_size - mcgb_size) / mcgb_size) if mcgb_size else 0
    return "|G|=%d |M|=%d reduced=%d%%" % (cgb_size, mcgb_size, pct)


def payload(result, minimal=None):
    """JSON-ready dict for a decomposition, schema-stable.

    Pass the pre-minimization result so the stats count what was
    removed; minimal is the pruned basis when one was computed.
    """
    ring = result.ring
    branches = []
    for br in result.branches:
        branches.append({
            "E": [str(p) for p in br.segment.equal],
            "N": [str(p) for p in br.segment.nonzero],
            "basis": [str(g) for g in br.basis],
            "lts": [_xmono_str(ring, t) for t in br.lts],
        })
    out = {
        "branches": branches,
        "cgb": [str(g) for g in result.cgb],
        "mcgb": None,
        "stats": {"cgb_size": len(result.cgb),
                  "mcgb_size": None, "removed": None},
    }
    if minimal is not None:
        out["mcgb"] = [str(g) for g in minimal]
        out["stats"]["mcgb_size"] = len(minimal)
        out["stats"]["removed"] = len(result.cgb) - len(minimal)
    return out


def _table(d):
    lines = []
    if not d["branches"]:
        lines.append("inconsistent segment")
    else:
        rows = [("#", "segment", "basis", "lt")]
        for i, br in enumerate(d["branches"], 1):
            seg = "E={%s} N={%s}" % (", ".join(br["E"]), ", ".join(br["N"]))
            if not br["basis"]:
                rows.append((str(i), seg, "-", "-"))
            for j, (g, t) in enumerate(zip(br["basis"], br["lts"])):
                rows.append((str(i) if j == 0 else "",
                             seg if j == 0 else "", g, t))
        widths = [max(len(r[k]) for r in rows) for k in range(4)]
        for r in rows:
            lines.append("  ".join(r[k].ljust(widths[k])
                                   for k in range(4)).rstrip())
    lines.append("")
    lines.append("CGB (%d):" % len(d["cgb"]))
    for g in d["cgb"]:
        lines.append("  " + g)
    if d["mcgb"] is not None:
        lines.append("MCGB (%d):" % len(d["mcgb"]))
        for g in d["mcgb"]:
            lines.append("  " + g)
        lines.append(summary_line(d["stats"]["cgb_size"],
                                  d["stats"]["mcgb_size"]))
    return "\n".join(lines) + "\n"


def render_payload(d, fmt="table"):
    """Format an already-built payload dict; the thin-client path."""
    if fmt == "json":
        return json.dumps(d, indent=2) + "\n"
    if fmt == "table":
        return _table(d)
    raise ValueError(f"unknown format {fmt!r}")


def render(result, fmt="table", minimal=None):
    """Render a decomposition as an aligned table or as JSON text."""
    return render_payload(payload(result, minimal), fmt)
