"""Torus-invariant primes of the quantum Grassmannian Gr(2,4), listed by key.

Run: python demos/grassmannian_positroids.py
"""

from qgrass.positroid import all_keys, hprime_count, hprime_poset, key_necklace, plucker_set


def fmt(sets):
    return " ".join("".join(map(str, s)) for s in sorted(sets)) or "-"


m, n = 2, 4
keys = all_keys(m, n)
print(f"Gr({m},{n}) has {hprime_count(m, n)} H-primes ({len(keys)} keyed, plus the irrelevant ideal)\n")

# Each key is a starting set gamma and a Le diagram on the partition it
# determines.  The prime is generated by the Plucker coordinates it contains,
# and the remaining coordinates form a positroid, summarised by its necklace.
print(f"{'gamma':>6}  {'black boxes':<22} {'in the prime':<28} necklace")
for key in keys:
    black = ",".join(f"{i}{j}" for i, j in sorted(key.diagram.black)) or "-"
    print(f"{fmt([key.gamma]):>6}  {black:<22} {fmt(plucker_set(key)):<28} {fmt(key_necklace(key))}")

# Comparing necklaces in the cyclic orders decides containment of primes.
poset = hprime_poset(m, n)
print(f"\nHasse diagram: {len(poset.hasse_edges)} covering relations")
print(f"minimal element: gamma={fmt([poset.nodes[poset.bottoms()[0]].gamma])}, no black boxes")
