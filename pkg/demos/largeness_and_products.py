"""
Finite largeness, subset-sum sampling, and distinct products
============================================================

Shows the finite stand-ins for combinatorial largeness: shifted-block
witnesses and their exact transport under dilation, randomized subset-sum
refutation, and growth of sequences with all subset products distinct.
"""

from monochrome import (
    WindowParams,
    dilate_set,
    dilation_transport,
    division_transport,
    enumerate_window,
    exclusion_set,
    finite_sums,
    format_element,
    grow_ufp,
    has_ufp,
    ipstar_refute,
    parse_element_set,
    parse_ring_spec,
    ps_witness_search,
    validate_ps_witness,
)

Z = parse_ring_spec("Z")
window = enumerate_window(Z, WindowParams(20))

# the even numbers admit a shifted-block witness: gaps + block + anchor
evens = parse_element_set(Z, "evens", window)
witness = ps_witness_search(
    evens, {Z.integer(0), Z.integer(1)}, {Z.integer(1), Z.integer(3)}, window)
print(f"evens witness: gaps={sorted(g.val for g in witness.gaps)} "
      f"block={sorted(b.val for b in witness.block)} "
      f"anchor={format_element(witness.anchor)}")

# dilation by r moves the witness exactly; division undoes it
tripled = dilate_set(evens, Z.integer(3))
moved = dilation_transport(witness, Z.integer(3))
print("transported witness still valid:", validate_ps_witness(moved, tripled))
print("round trip restores it:",
      division_transport(moved, Z.integer(3)) == witness)

# all finite subset sums of {2, 3, 6}
fs = finite_sums([Z.integer(n) for n in (2, 3, 6)])
print("FS({2,3,6}) =", sorted(e.val for e in fs.sums))

# sampling refutation: the odd numbers miss some subset sum almost at once
draws = enumerate_window(Z, WindowParams(100))
odds = frozenset(e for e in draws.elements if e.val % 2 == 1)
seq = ipstar_refute(odds, draws, 1, 5, 0)
print("odd numbers refuted by the draw:", [e.val for e in seq])

# the multiples of 3 survive every sample: pigeonhole forces a good sum
ambient = enumerate_window(Z, WindowParams(300, signed=True))
multiples = frozenset(e for e in ambient.elements if e.val % 3 == 0)
print("3Z refuted?", ipstar_refute(multiples, draws, 3, 200, 0))

# growing a sequence whose subset products are pairwise distinct
pool = enumerate_window(Z, WindowParams(10000))
seq = grow_ufp(Z.integer(2), pool, 10)
print("distinct-product growth from 2:", [e.val for e in seq.elements])
print("collision found:", has_ufp(seq))
print("subset products generated:", len(seq.fp_set()))

# the exclusion set lists every ratio a later pick must avoid
b = {Z.integer(n) for n in (2, 3, 4)}
print("ratios to avoid after {2,3,4}:", sorted(e.val for e in exclusion_set(b)))
