"""Every checkable identity, with the statement it encodes and default sizes."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class IdentityInfo:
    id: str
    kind: str  # series | point | det | combi
    statement: str
    defaults: dict[str, Any] = field(default_factory=dict)


_ENTRIES = [
    # series identities, compared coefficientwise up to total x-degree D
    IdentityInfo("littlewood1", "series",
                 "sum_lam a^c(lam) s_lam = prod_i (1-a x_i)^-1 prod_{j<k} (1-x_j x_k)^-1",
                 {"n": 3, "D": 8}),
    IdentityInfo("iw2", "series", "sum_lam f_lam(a,b) s_lam = Phi(X;a,b)", {"n": 3, "D": 8}),
    IdentityInfo("eq3", "series", "sum_lam s_lam = prod_i (1-x_i)^-1 prod_{i<j} (1-x_i x_j)^-1",
                 {"n": 3, "D": 8}),
    IdentityInfo("eq4", "series",
                 "sum_{lam even} s_lam = prod_i (1-x_i^2)^-1 prod_{i<j} (1-x_i x_j)^-1", {"n": 3, "D": 8}),
    IdentityInfo("eq5", "series", "sum_{lam' even} s_lam = prod_{i<j} (1-x_i x_j)^-1", {"n": 3, "D": 8}),
    IdentityInfo("thm1", "series", "sum_lam f_lam(a,b,c) s_lam = Phi(X;a,b) prod_i (1-c x_i)^-1",
                 {"n": 3, "D": 7}),
    IdentityInfo("littlewood2", "series",
                 "sum_lam a^r(lam) s_lam = prod_i (1+a x_i)/(1-x_i^2) prod_{j<k} (1-x_j x_k)^-1",
                 {"n": 3, "D": 8}),
    IdentityInfo("remark3a", "series",
                 "sum_lam f_lam'(a,b) s_lam = prod_i (1+a x_i)(1+b x_i)/(1-x_i^2) prod_{j<k} (1-x_j x_k)^-1",
                 {"n": 3, "D": 8}),
    IdentityInfo("remark3b", "series",
                 "sum_lam f_lam'(a,b,c) s_lam = prod_i (1+a x_i)(1+b x_i)(1+c x_i)/(1-x_i^2)"
                 " prod_{j<k} (1-x_j x_k)^-1",
                 {"n": 3, "D": 7}),
    # rectangle sums at random rational points
    IdentityInfo("thm5", "point",
                 "sum_{lam in (m^n)} f_lam(a,b) s_lam = sum_xi beta(xi,a,b) Phi(X^xi;a,b) prod_i x_i^(m(1-xi_i)/2)",
                 {"n": 2, "m": 2, "trials": 20}),
    IdentityInfo("cor1a", "point",
                 "sum_{lam in (m^n)} s_lam = sum_xi Phi(X^xi;1,0) prod_i x_i^(m(1-xi_i)/2)",
                 {"n": 2, "m": 2, "trials": 20}),
    IdentityInfo("cor1b", "point",
                 "sum_{lam in ((2m)^n), lam even} s_lam = sum_xi Phi(X^xi;1,-1) prod_i x_i^(m(1-xi_i))",
                 {"n": 2, "m": 2, "trials": 20}),
    IdentityInfo("cor1c", "point",
                 "sum_{lam in (m^n), lam' even} s_lam = sum_{xi, |xi|_-1 even} Phi(X^xi;0,0)"
                 " prod_i x_i^(m(1-xi_i)/2)  (n even)",
                 {"n": 2, "m": 2, "trials": 20}),
    IdentityInfo("m_to_inf", "point",
                 "|rectangle sum(m) - Phi(X;a,b)| strictly decreases along m = 2,4,6,8 for a, b, x in (0,1)",
                 {"n": 2, "trials": 5}),
    # polynomial identities with denominators cleared
    IdentityInfo("thm2", "det",
                 "det(x_i^(j-1) - x_i^(m+2n-j)) = sum_{lam_1<=m} s_lam * prod_i (1-x_i) prod_{i<j} (x_i-x_j)(x_i x_j-1)",
                 {"n": 3, "m": 2}),
    IdentityInfo("thm3", "det",
                 "det(x_i^(j-1) - x_i^(2m+2n+1-j)) = sum_{lam_1<=2m, lam even} s_lam"
                 " * prod_i (1-x_i^2) prod_{i<j} (x_i-x_j)(x_i x_j-1)",
                 {"n": 3, "m": 2}),
    IdentityInfo("thm4", "det",
                 "det(x_i^(j-1) - x_i^(m+2n-1-j)) + det(x_i^(j-1) + x_i^(m+2n-1-j))"
                 " = 2 sum_{lam_1<=m, lam' even} s_lam * prod_{i<j} (x_i-x_j)(x_i x_j-1)  (n even)",
                 {"n": 2, "m": 2}),
    IdentityInfo("cor2a", "det", "det(x_i^(j-1) - x_i^(2n-j)) = prod_i (1-x_i) prod_{i<j} (x_i-x_j)(x_i x_j-1)",
                 {"n": 3}),
    IdentityInfo("cor2b", "det",
                 "det(x_i^(j-1) - x_i^(2n-j+1)) = prod_i (1-x_i^2) prod_{i<j} (x_i-x_j)(x_i x_j-1)", {"n": 3}),
    IdentityInfo("cor2c", "det", "det(x_i^(j-1) + x_i^(2n-1-j)) = 2 prod_{i<j} (x_i-x_j)(x_i x_j-1)", {"n": 3}),
    IdentityInfo("eq13", "det",
                 "sum_sigma sgn(sigma) prod_i x_sigma(i)^(i-1) = det(x_j^(i-1)) = prod_{i<j} (x_j-x_i)", {"n": 4}),
    IdentityInfo("eq14", "det",
                 "prod_{i<j} (x_i^xi_i - x_j^xi_j)(1 - x_i^xi_i x_j^xi_j)"
                 " = prod_{i<j} (x_i-x_j)(1-x_i x_j) prod_i x_i^((n-1)(xi_i-1)) for every xi",
                 {"n": 3}),
    IdentityInfo("remark1", "det",
                 "sum_k e_k * sum_{lam_1<=2m, lam even} s_lam = sum_{lam_1<=2m+1} s_lam, and sum_k e_k = prod_i (1+x_i)",
                 {"n": 3, "m": 2}),
    # finite enumerations
    IdentityInfo("eq7", "combi", "f_lam(a,b) = sum_{mu in H(lam)} b^|lam/mu| a^c(mu) for |lam| <= D", {"D": 12}),
    IdentityInfo("eq8", "combi",
                 "f_lam(a,b,c) = sum_{(mu,nu) in C(lam)} a^c(nu) b^|mu/nu| c^|lam/mu| for |lam| <= D", {"D": 10}),
    IdentityInfo("lemma1", "combi", "sum over B(lam) of a^c(nu) b^|mu/nu| c^|lam/mu| = F_Gamma(lam)(a,b,c)",
                 {"D": 10}),
    IdentityInfo("lemma2", "combi",
                 "sum over B_J(lam) = (abc)^|J| F_{delta_J Gamma(lam)}, and B_J(lam) is empty iff delta_J"
                 " leaves a negative multiplicity",
                 {"D": 8}),
    IdentityInfo("incl_excl", "combi",
                 "sum_J (-1)^|J| (sum over B_J(lam)) = sum over C(lam), also with B_p pairs counted"
                 " C(#incompatible rows, p) times",
                 {"D": 8}),
    IdentityInfo("pieri", "combi", "s_mu h_k = sum of s_lam over horizontal k-strips lam/mu (|mu| <= D, k <= m)",
                 {"n": 4, "D": 6, "m": 4}),
    IdentityInfo("schur_routes", "combi",
                 "Jacobi-Trudi = tableau sum exactly, = bialternant at `trials` points (|lam| <= D, up to n variables)",
                 {"n": 4, "D": 8, "trials": 5}),
]

CATALOG: dict[str, IdentityInfo] = {e.id: e for e in _ENTRIES}


def catalog_text() -> str:
    width = max(len(k) for k in CATALOG)
    lines = []
    for e in _ENTRIES:
        lines.append(f"{e.id:<{width}}  [{e.kind}] {e.statement}")
    return "\n".join(lines)
