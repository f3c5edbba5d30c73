"""
Twin paths and the anchor star
==============================

The simple graph replaces parallel root edges by a star of anchors and
doubles both paths.  The tree count is no longer K_m * K_{m-1}, but that
product still divides it: the root cofactor splits as
det(A) * det(B) * det(R).
"""

from treespectrum import ConstructionParams, build_simple_graph, det, extract_blocks, tau_kirchhoff
from treespectrum.constructions import pad_graph

params = ConstructionParams(m=4, q=3, word=(2, 4, 3, 2))
G = build_simple_graph(params)
print(f"{G.n} vertices (4m + q - 1 = {4 * params.m + params.q - 1}), {len(G.edges)} edges")

blocks = extract_blocks(params)
print("P (u-path against anchors):")
for row in blocks.P.tolist():
    print("  ", row)
print("F (anchor block):", blocks.F.tolist())

dA, dB, dR = det(blocks.A), det(blocks.B), det(blocks.R)
tau = tau_kirchhoff(G).value
print(f"tau = {tau} = {dA} * {dB} * {dR}")
assert tau == dA * dB * dR

##############################################################################
# Padding with pendant vertices on a_1 does not change the count

for n in (G.n, G.n + 3, G.n + 10):
    print(n, tau_kirchhoff(pad_graph(G, n)).value)
