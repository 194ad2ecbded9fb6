"""Walk through the built-in algebras: axioms, connections, ideals and simplicity.

    python3 demos/walkthrough.py
"""

from poissoncolor import (
    GF,
    builtin_example,
    check_axioms,
    decompose,
    equivalence_classes,
    is_simple,
    minimal_ideal_decomposition,
    restricted_support,
    simplicity_hypotheses,
)

F5 = GF(5)


def show(name):
    A = builtin_example(name, F5)
    print(f"== {name}: dim {A.n}, g0 = {list(A.g0.coords)}")
    print("   axioms pass:", check_axioms(A).passed)

    P = equivalence_classes(restricted_support(A))
    for cls in P.classes:
        print("   class:", [list(g.coords) for g in cls])

    d = decompose(A, P)
    for D in d.descriptors:
        print(f"   ideal of dim {D.dim} (is ideal: {D.is_ideal})")
    print("   sum is P:", d.sums_to_P, "| direct:", d.is_direct)

    hyps = simplicity_hypotheses(A, symmetric=True)
    missing = [k for k, v in hyps.items() if not v]
    print("   hypotheses missing:", missing or "none")
    print("   simple (oracle):", is_simple(A, "oracle"))
    if not missing:
        mid = minimal_ideal_decomposition(A)
        print("   simple components:", [c.algebra.n for c in mid.components])
    print()


if __name__ == "__main__":
    for name in ("odd-line", "orthogonal-sum", "berezin", "berezin-pair"):
        show(name)
