#!/usr/bin/env python3
"""Minimal MILP solver for the LP files this project emits.

Usage: lp_solve.py <model.lp> <solution.out>
       lp_solve.py --probe

Reads the sectioned LP format (Minimize / Subject To / Bounds / Binary /
End) written by the `ilp-export` subcommand, solves it with scipy's MILP
interface, and writes one `name value` line per variable. An infeasible
model produces a single `# infeasible` line. Exit code 0 in both cases.
"""

import sys


def parse_lp(path):
    sections = {"minimize": [], "subject to": [], "bounds": [], "binary": []}
    current = None
    with open(path) as f:
        for raw in f:
            line = raw.strip()
            if not line:
                continue
            low = line.lower()
            if low in ("minimize", "subject to", "bounds", "binary", "end"):
                current = None if low == "end" else low
                continue
            if current is not None:
                sections[current].append(line)
    return sections


def parse_expr(tokens):
    """[sign] [coef] var ((+|-) [coef] var)* -> list of (coef, var)"""
    terms = []
    sign = 1
    coef = None
    for tok in tokens:
        if tok == "+":
            sign, coef = 1, None
        elif tok == "-":
            sign, coef = -1, None
        else:
            try:
                coef = sign * int(tok)
            except ValueError:
                terms.append((sign if coef is None else coef, tok))
                sign, coef = 1, None
    return terms


def main():
    if len(sys.argv) == 2 and sys.argv[1] == "--probe":
        import scipy.optimize  # noqa: F401

        print("ok")
        return 0
    if len(sys.argv) != 3:
        print(__doc__, file=sys.stderr)
        return 2

    import numpy as np
    from scipy.optimize import LinearConstraint, milp
    from scipy.sparse import lil_matrix

    sections = parse_lp(sys.argv[1])

    var_index = {}

    def vid(name):
        if name not in var_index:
            var_index[name] = len(var_index)
        return var_index[name]

    obj_terms = []
    for line in sections["minimize"]:
        body = line.split(":", 1)[1] if ":" in line else line
        obj_terms += parse_expr(body.split())

    rows = []
    for line in sections["subject to"]:
        body = line.split(":", 1)[1] if ":" in line else line
        tokens = body.split()
        op_pos = next(i for i, t in enumerate(tokens) if t in (">=", "<=", "="))
        terms = parse_expr(tokens[:op_pos])
        rhs = int(tokens[op_pos + 1])
        rows.append((terms, tokens[op_pos], rhs))
        for _, name in terms:
            vid(name)

    for name in sections["binary"]:
        vid(name)

    nvars = len(var_index)
    c = np.zeros(nvars)
    for coef, name in obj_terms:
        c[vid(name)] += coef

    lb = np.zeros(nvars)
    ub = np.ones(nvars)
    for line in sections["bounds"]:
        tokens = line.split()
        if len(tokens) == 3 and tokens[1] == "=":
            i = vid(tokens[0])
            lb[i] = ub[i] = float(tokens[2])

    a = lil_matrix((len(rows), nvars))
    cl = np.full(len(rows), -np.inf)
    cu = np.full(len(rows), np.inf)
    for r, (terms, op, rhs) in enumerate(rows):
        for coef, name in terms:
            a[r, vid(name)] += coef
        if op in (">=", "="):
            cl[r] = rhs
        if op in ("<=", "="):
            cu[r] = rhs

    res = milp(
        c=c,
        constraints=LinearConstraint(a.tocsr(), cl, cu),
        integrality=np.ones(nvars),
        bounds=__import__("scipy.optimize", fromlist=["Bounds"]).Bounds(lb, ub),
    )

    with open(sys.argv[2], "w") as out:
        if res.status == 2:  # infeasible
            out.write("# infeasible\n")
            return 0
        if res.status != 0 or res.x is None:
            print(f"solver failure: status={res.status} {res.message}", file=sys.stderr)
            return 3
        out.write(f"# objective {res.fun}\n")
        names = sorted(var_index, key=var_index.get)
        for name in names:
            val = res.x[var_index[name]]
            out.write(f"{name} {int(round(val))}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
