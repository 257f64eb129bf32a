"""
Exact-integer Euler characteristic calculus on stratified complex varieties.

Modules:
    poset, matrix: stratification posets and unipotent transition matrices
    functions: constructible functions and the open/closed/hat bases
    ic: link systems, ic functions, the ic basis and K-level classes
    pushforward: proper-map kernels and the multiplicative formulas
    homs, class_formulas: homomorphisms given on a basis and class-level checks
"""
