"""Dimensions of L(E), of the product graph algebra, of the plain tensor product
and of the cross product, for a few small graphs.

    python3 scripts/dimension_table.py --field F3 --bound 3
"""

import argparse
import time

from leavitt import cross, lpa
from leavitt.graph import Edge, Graph, line_graph, loop_graph, point_graph, product_graph
from leavitt.scalars import FieldSpec

GRAPHS = {
    "point": point_graph(),
    "line": line_graph(),
    "loop": loop_graph(),
    "rose2": Graph(("v",), (Edge("e", "v", "v"), Edge("g", "v", "v"))),
    "A3": Graph(("a", "b", "c"), (Edge("x", "a", "b"), Edge("y", "b", "c"))),
}


def dim(g, bound):
    # finite graphs are exact, graphs with cycles are truncated at the bound
    if g.is_acyclic:
        return lpa.basis_and_dimension(g).dim, True
    return len(lpa.normal_monomials(g, bound)), False


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--field", default="Q")
    ap.add_argument("--bound", type=int, default=2, help="length bound for graphs with cycles")
    args = ap.parse_args(argv)
    K = FieldSpec.parse(args.field)

    names = list(GRAPHS)
    print(f"field {K.name}, bound {args.bound} for graphs with cycles (* marks truncated values)")
    print(f"{'E':>6} {'F':>6} {'L(E)':>6} {'L(F)':>6} {'L(ExF)':>8} {'tensor':>8} {'cross':>7} {'time':>7}")
    for i, a in enumerate(names):
        for b in names[i:]:
            e, f = GRAPHS[a], GRAPHS[b]
            start = time.perf_counter()
            de, ex_e = dim(e, args.bound)
            df, ex_f = dim(f, args.bound)
            dp, ex_p = dim(product_graph(e, f), args.bound)
            bound = None if ex_e and ex_f else args.bound
            naive = cross.naive_tensor_dimension(e, f, bound)
            space = cross.cross_product(e, f, K, bound)
            elapsed = time.perf_counter() - start

            def cell(n, exact, w):
                return f"{n}{'' if exact else '*'}".rjust(w)

            print(f"{a:>6} {b:>6} {cell(de, ex_e, 6)} {cell(df, ex_f, 6)} {cell(dp, ex_p, 8)} "
                  f"{cell(naive, bound is None, 8)} {cell(space.dim, space.is_exact, 7)} {elapsed:6.3f}s")


if __name__ == "__main__":
    main()
