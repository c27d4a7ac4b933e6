"""How often does the classical torus action recover homogeneous components?

For each field, samples random elements of bounded degree and counts the
degrees n at which the classical eigenspace equals the true component, next
to the schematic recovery which should always be exact.  Also prints the
invariance profile of a few ideals of K[x, 1/x].

    python3 scripts/classical_vs_schematic.py --samples 200 --seed 1
"""

import argparse
import random

from leavitt import gauge, ideals, lpa
from leavitt.graph import Edge, Graph, line_graph, loop_graph, product_graph
from leavitt.sampling import ElementConfig, random_element_in_degrees
from leavitt.scalars import FieldSpec

FIELDS = ["F2", "F3", "F5", "F7", "Q"]
IDEALS = [("1 + x", {0: 1, 1: 1}), ("1 + x^2", {0: 1, 2: 1}), ("1 + x^4", {0: 1, 4: 1}), ("x^3", {3: 1})]


def recovery_rates(K, samples, rng, k=2):
    graphs = [line_graph(), product_graph(line_graph(), line_graph()), loop_graph(),
              Graph(("v",), (Edge("e", "v", "v"), Edge("g", "v", "v")))]
    cfg = ElementConfig(max_terms=5, max_length=2)
    bound = None if K.is_finite else 10
    classical = schematic = total = 0
    for _ in range(samples):
        a = random_element_in_degrees(rng, rng.choice(graphs), K, -k, k, cfg)
        action = gauge.GaugeAction(a.graph, K)
        comps = lpa.grade(a)
        for n in range(-k, k + 1):
            exact = comps.get(n, lpa.zero(a.graph, K))
            classical += gauge.classical_eigenspace(a, n, bound) == exact
            schematic += gauge.recover_component(action, a, n) == exact
            total += 1
    return classical / total, schematic / total


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)

    print(f"component recovery over {args.samples} elements with degrees in [-2, 2]")
    print(f"{'field':>6} {'classical':>10} {'schematic':>10}")
    for name in FIELDS:
        c, s = recovery_rates(FieldSpec.parse(name), args.samples, rng)
        print(f"{name:>6} {c:10.3f} {s:10.3f}")

    print()
    print("ideals of K[x, 1/x]: classical / graded / schematic")
    for name in FIELDS:
        K = FieldSpec.parse(name)
        cells = []
        for label, coeffs in IDEALS:
            I = ideals.laurent_ideal(coeffs, K)
            flags = (ideals.is_classically_invariant(I, None if K.is_finite else 10),
                     ideals.is_graded_ideal(I), ideals.is_schematically_invariant(I))
            cells.append(f"({label}) " + "".join("Y" if f else "n" for f in flags))
        print(f"{name:>6}  " + "   ".join(cells))


if __name__ == "__main__":
    main()
