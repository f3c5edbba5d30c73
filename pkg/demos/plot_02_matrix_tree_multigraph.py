"""
Matrix-Tree counts on the root-and-two-paths multigraph
=======================================================

Deleting the root from this multigraph's Laplacian leaves two decoupled
tridiagonal blocks, so its tree count is exactly K_m * K_{m-1}.  We check that
against brute-force enumeration.
"""

from treespectrum import build_multigraph, continuant_pair, laplacian, tau_enumerate, tau_kirchhoff
from treespectrum.graph_model import cofactor, to_dot

word = (2, 3, 2)
H = build_multigraph(word)
print([r.tag for r in H.vertices])
for (u, v), mult in H.edges:
    print(f"  {H.vertices[u]} -- {H.vertices[v]}  x{mult}")

print("Laplacian:")
for row in laplacian(H).tolist():
    print("  ", row)

# Root cofactor: block diagonal with T_3(2,3,2) and T_2(2,3).
print("cofactor at rho:", cofactor(H, 0).tolist())

K_m, K_m1 = continuant_pair(word)
print("K_m * K_m-1      =", K_m * K_m1)
print("Kirchhoff        =", tau_kirchhoff(H).value)
print("enumerated trees =", tau_enumerate(H).value)

##############################################################################
# A DOT rendering, with multiplicities as edge labels

print(to_dot(H))
