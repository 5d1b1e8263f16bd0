"""
The twist coefficient from raw Kauffman relations
=================================================

A positive kink followed by the crossings s1 ... s_{n-1}, fully resolved
over all 2^n smoothings, leaves -q^(n+2) on the all-through-strands
matching.  The graded single-twist reduction predicts the same number.
"""

from skeinfaith.graded import single_twist_reduce
from skeinfaith.surface import DTCoord, preset
from skeinfaith.tldiag import DiagramWord, TLElement, resolve, twist_lemma_coefficient

print("kink:", resolve(DiagramWord.parse("k+", 1)))
print("s1 s1':", resolve(DiagramWord.parse("s1 s1'", 2)))
print("e1 e1:", TLElement.e(2, 1) * TLElement.e(2, 1))

torus = preset("torus")
for n in range(1, 9):
    oracle = twist_lemma_coefficient(n)
    formula, _ = single_twist_reduce(torus, DTCoord((n,), (1,)), 0)
    print(f"n={n}: state sum {oracle}, formula {formula}, agree={oracle == formula}")
