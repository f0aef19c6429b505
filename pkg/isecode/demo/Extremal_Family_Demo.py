# isecode/demo/Extremal_Family_Demo.py

import logging
from fractions import Fraction
from isecode.Models.family import density, is_t_intersecting, project
from isecode.Models.word import TVector
from isecode.Utils.constructions import construct_product, density_K
from isecode.Utils.correlation import run_correlation_campaign
from isecode.Utils.extremal_search import best_K, max_family
from isecode.Utils.measures import bound_thm7, mu_p
from isecode.Utils.rational import approx_text

logging.basicConfig(level=logging.WARNING, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s")


def demo_product_bound():
    # Step 1: the product bound for three symbols, five positions, three shared 1s
    t = TVector.of(3, 0, 0)
    bound = bound_thm7(5, 3, t)
    print(f"bound for t=({t}) in [3]^5: {bound.words} words, density {approx_text(bound.density)}")

    # Step 2: the construction that attains it
    F = construct_product(5, 3, t)
    print(f"construction: {F.size} words, intersecting: {is_t_intersecting(F, t)}")
    print(f"density equals mu_(1/3) of its projection: {density(F) == mu_p(project(F, 1), Fraction(1, 3))}")

    # Step 3: the exhaustive search agrees
    result = max_family(5, 3, t)
    print(f"exact search: {result.max_size} words after {result.nodes_explored} nodes in {result.elapsed_ms} ms")


def demo_two_symbols():
    # Step 4: binary words, block majority families against the exact maximum
    for n in range(4, 7):
        K = best_K(n, (1, 1))
        found = max_family(n, 2, TVector.of(1, 1)).max_size
        print(f"n={n}: best K has {K.size} words (|X1|={K.n1}, |X2|={K.n2}), exact maximum {found}")
    print(f"density of K for two blocks of 100 and t=(2,2): {approx_text(density_K(100, 100, (2, 2)))}")


def demo_correlation():
    # Step 5: a short seeded campaign on complete families
    report = run_correlation_campaign(3, 3, trials=50, seed=7)
    print(f"{report.trials} pairs, {report.violations} violations, minimum slack {report.min_slack}")


if __name__ == "__main__":
    demo_product_bound()
    demo_two_symbols()
    demo_correlation()
