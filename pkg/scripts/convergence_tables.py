#!/usr/bin/env python3
"""Emit the convergence tables behind the asymptotic engines.

Three tables, CSV on stdout or into --outdir:

  q          quadrature vs the large-q Laplace/Watson leading terms over a
             doubling q grid (weighted hermite/laguerre/jacobi, unweighted
             jacobi including the symmetric tie case)
  parameter  quadrature vs the large-parameter leading terms over a doubling
             alpha/lambda grid (log-domain ratios)
  shannon    quadrature vs the Shannon-functional parameter forms

Example:
  python scripts/convergence_tables.py --table all --outdir tables/
"""
import argparse
import math
import sys
from pathlib import Path

from hopnorms.families import gegenbauer, hermite, jacobi, laguerre
from hopnorms.laplace import unweighted_norm_q_asym, weighted_norm_q_asym
from hopnorms.measures import functional_E_log
from hopnorms.norms import unweighted_norm_quad, weighted_norm_quad
from hopnorms.paramasym import (gegenbauer_weighted_param, jacobi_shannon_param,
                                jacobi_unweighted_param, jacobi_weighted_param,
                                laguerre_shannon_param, laguerre_unweighted_param,
                                laguerre_weighted_param)


def q_table():
    rows = [("case", "q", "log_quad", "log_asym", "ratio_minus_1")]
    weighted = [("hermite-n1", hermite(), 1), ("hermite-n2", hermite(), 2),
                ("laguerre-a3-n1", laguerre(3.0), 1), ("jacobi-1.5-2.5-n0", jacobi(1.5, 2.5), 0)]
    for label, fam, n in weighted:
        for q in (25.0, 50.0, 100.0, 200.0, 400.0):
            lq = weighted_norm_quad(fam, n, q).value.log_abs
            la = weighted_norm_q_asym(fam, n, q).value.log_abs
            rows.append((f"weighted-{label}", q, lq, la, math.expm1(lq - la)))
    unweighted = [("jacobi-1-0-n1", jacobi(1.0, 0.0), 1),
                  ("jacobi-0-0.5-n2", jacobi(0.0, 0.5), 2),
                  ("legendre-tie-n1", jacobi(0.0, 0.0), 1)]
    for label, fam, n in unweighted:
        for q in (50.0, 100.0, 200.0, 400.0):
            lq = unweighted_norm_quad(fam, n, q).value.log_abs
            la = unweighted_norm_q_asym(fam, n, q).value.log_abs
            rows.append((f"unweighted-{label}", q, lq, la, math.expm1(lq - la)))
    return rows


def parameter_table():
    rows = [("case", "parameter", "log_quad", "log_asym", "log_ratio")]
    cases = [
        ("laguerre-unweighted-n1-q2",
         lambda a: unweighted_norm_quad(laguerre(a), 1, 2.0).value.log_abs,
         lambda a: laguerre_unweighted_param(1, a, 2.0).log_value),
        ("laguerre-weighted-n1-q2",
         lambda a: weighted_norm_quad(laguerre(a), 1, 2.0).value.log_abs,
         lambda a: laguerre_weighted_param(1, a, 2.0).log_value),
        ("jacobi-unweighted-n1-b0-q2",
         lambda a: unweighted_norm_quad(jacobi(a, 0.0), 1, 2.0).value.log_abs,
         lambda a: jacobi_unweighted_param(1, a, 0.0, 2.0).log_value),
        ("jacobi-weighted-n1-b0-q2",
         lambda a: weighted_norm_quad(jacobi(a, 0.0), 1, 2.0).value.log_abs,
         lambda a: jacobi_weighted_param(1, a, 0.0, 2.0).log_value),
        ("gegenbauer-weighted-n1-q2",
         lambda a: weighted_norm_quad(gegenbauer(a), 1, 2.0).value.log_abs,
         lambda a: gegenbauer_weighted_param(1, a, 2.0).log_value),
    ]
    for label, quad, asym in cases:
        for a in (100.0, 200.0, 400.0, 800.0, 1600.0):
            lq, la = quad(a), asym(a)
            rows.append((label, a, lq, la, la / lq))
    return rows


def shannon_table():
    rows = [("case", "parameter", "log_quad", "log_asym", "log_ratio")]
    for a in (500.0, 1000.0, 2000.0, 4000.0):
        lq = (-functional_E_log(laguerre(a), 1)).log_abs
        la = laguerre_shannon_param(1, a).log_value
        rows.append(("laguerre-shannon-m1", a, lq, la, la / lq))
        lq = functional_E_log(jacobi(a, 0.0), 1).log_abs
        la = jacobi_shannon_param(1, a, 0.0).log_value
        rows.append(("jacobi-shannon-n1-b0", a, lq, la, la / lq))
    return rows


TABLES = {"q": q_table, "parameter": parameter_table, "shannon": shannon_table}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--table", default="all", choices=sorted(TABLES) + ["all"])
    ap.add_argument("--outdir", default=None)
    args = ap.parse_args(argv)

    names = sorted(TABLES) if args.table == "all" else [args.table]
    for name in names:
        rows = TABLES[name]()
        text = "\n".join(",".join("%.17g" % v if isinstance(v, float) else str(v)
                                  for v in row) for row in rows)
        if args.outdir:
            path = Path(args.outdir)
            path.mkdir(parents=True, exist_ok=True)
            (path / f"{name}_convergence.csv").write_text(text + "\n")
            print(f"wrote {path / f'{name}_convergence.csv'}")
        else:
            print(f"# table: {name}")
            print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
