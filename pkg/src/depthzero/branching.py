"""Multiplicities of principal-series constituents in St(<a>)^{K_+}.

Everything happens in the Grothendieck group, in the basis of standard
modules pi(b) indexed by multisegments.  For a product of Zelevinsky duals of
segments with lengths l_1, ..., l_r the multiplicity of pi_mu is the Kostka
number K(mu', sorted lengths).  A general <a> is first expanded as
sum_b c_b pi(b) by inverting the unitriangular matrix of decomposition
numbers; duality is a ring map, so St(<a>) = sum_b c_b St(pi(b)).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import factorial, prod

from .multisegments import (Multisegment, decomposition_number, format_multisegment,
                            linked, parse_multisegment, partition_P, poset, zelevinsky_dual)
from .partitions import (Partition, PartitionVector, conjugate, dominates, format_partition,
                         kostka_ssyt, parse_partition, partitions, sign_induction_multiplicities)
from .symgroup import standard_tableaux_count


class BackendInconsistency(RuntimeError):
    pass


CONDITIONAL_NOTE = ("multiplicities are computed from decomposition numbers obtained via "
                    "Kazhdan-Lusztig polynomials; occurrence of pi_mu with mu below P(a) is "
                    "decided by the computed value, not by the dominance condition alone")


@dataclass
class BranchingResult:
    n: int
    multiplicities: PartitionVector
    top: Partition
    certified_bounds: dict = field(default_factory=dict)

    def __post_init__(self):
        if any(v < 0 for v in self.multiplicities.values()):
            raise BackendInconsistency(
                "backend inconsistency: decomposition numbers invalid (negative multiplicity)")

    @property
    def support(self) -> list[Partition]:
        return self.multiplicities.support()

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "top": list(self.top),
            "multiplicities": self.multiplicities.to_dict(),
            "certified_bounds": dict(self.certified_bounds),
        }


def _certify(mults: PartitionVector, top: Partition) -> dict:
    return {
        "nonnegative": all(v >= 0 for v in mults.values()),
        "top_multiplicity_one": mults[top] == 1,
        "support_below_top": all(dominates(top, mu) for mu in mults),
    }


def generic_multiplicities(lengths) -> PartitionVector:
    """mu -> K(mu', lam') for lam the conjugate of the sorted lengths."""
    content = Partition(sorted(lengths, reverse=True))
    n = content.n
    return PartitionVector(n, {mu: kostka_ssyt(conjugate(mu), content) for mu in partitions(n)})


def generic_branching(lengths) -> BranchingResult:
    """St(<D_1>) x ... x St(<D_r>) with segment lengths ``lengths``."""
    lengths = tuple(int(l) for l in lengths)
    if not lengths or any(l < 1 for l in lengths):
        raise ValueError(f"lengths must be a nonempty tuple of positive integers: {lengths}")
    lam = conjugate(sorted(lengths, reverse=True))
    via_kostka = generic_multiplicities(lengths)
    via_hecke = sign_induction_multiplicities(lengths)
    if via_kostka != via_hecke:
        raise AssertionError(f"Kostka and sign induction disagree for {lengths}")
    cert = _certify(via_kostka, lam)
    cert["kostka_equals_sign_induction"] = True
    return BranchingResult(lam.n, via_kostka, lam, cert)


def expand_in_standard_basis(a: Multisegment, cap: int | None = None) -> dict[Multisegment, int]:
    """Coefficients c_b with <a> = sum_b c_b pi(b)."""
    a = Multisegment(a)
    nodes = list(poset(a, cap).nodes)  # top first
    coeffs: dict[Multisegment, int] = {}
    for idx, b in enumerate(nodes):
        if idx == 0:
            coeffs[b] = 1
            continue
        # sum_c c_c m(b; c) = 0 for b != a; only c above b contribute
        total = sum(cc * decomposition_number(b, c) for c, cc in coeffs.items() if cc)
        diag = decomposition_number(b, b)
        if diag != 1:
            raise BackendInconsistency(f"backend inconsistency: m({b};{b}) = {diag}")
        coeffs[b] = -total
    return {b: c for b, c in coeffs.items() if c}


def branch(a: Multisegment, cap: int | None = None) -> BranchingResult:
    """Multiplicity of every pi_mu in St(<a>)^{K_+}."""
    a = Multisegment(a)
    top = partition_P(a)
    n = a.degree
    acc: dict[Partition, int] = {}
    for b, c in expand_in_standard_basis(a, cap).items():
        lengths = Partition(b.lengths())
        for mu in partitions(n):
            k = kostka_ssyt(conjugate(mu), lengths)
            if k:
                acc[mu] = acc.get(mu, 0) + c * k
    mults = PartitionVector(n, acc)
    if any(v < 0 for v in mults.values()):
        bad = {format_partition(k): v for k, v in mults.items() if v < 0}
        raise BackendInconsistency(
            f"backend inconsistency: decomposition numbers invalid (negative multiplicities {bad})")
    cert = _certify(mults, top)
    return BranchingResult(n, mults, top, cert)


def is_pairwise_unlinked(a: Multisegment) -> bool:
    return not any(linked(a[i], a[j]) for i in range(len(a)) for j in range(i + 1, len(a)))


def dimension_check(a: Multisegment, result: BranchingResult | None = None,
                    coeffs: dict | None = None) -> tuple[int, int]:
    """(sum_mu mult * dim rho_mu, sum_b c_b n!/prod l_i!) which must agree."""
    result = result or branch(a)
    coeffs = coeffs if coeffs is not None else expand_in_standard_basis(a)
    n = a.degree
    left = sum(v * standard_tableaux_count(mu) for mu, v in result.multiplicities.items())
    right = sum(c * factorial(n) // prod(factorial(l) for l in b.lengths())
                for b, c in coeffs.items())
    return left, right


@dataclass
class BranchReport:
    multisegment: Multisegment
    result: BranchingResult
    poset_nodes: list
    poset_edges: list
    coefficients: dict
    m_matrix: list
    top: Partition
    dual: Multisegment
    dual_partition: Partition
    flags: dict

    def to_dict(self) -> dict:
        fm = format_multisegment
        return {
            "multisegment": fm(self.multisegment),
            "n": self.result.n,
            "top": format_partition(self.top),
            "dual": fm(self.dual),
            "dual_partition": format_partition(self.dual_partition),
            "multiplicities": self.result.multiplicities.to_dict(),
            "poset": {
                "nodes": [fm(b) for b in self.poset_nodes],
                "edges": [[fm(u), fm(v)] for u, v in self.poset_edges],
            },
            "coefficients": {fm(b): c for b, c in self.coefficients.items()},
            "m_matrix": self.m_matrix,
            "flags": dict(self.flags),
            "note": CONDITIONAL_NOTE,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "BranchReport":
        ps = parse_multisegment
        result = BranchingResult(
            data["n"], PartitionVector.from_dict(data["multiplicities"]),
            parse_partition(data["top"]),
            {k: v for k, v in data["flags"].items()
             if k in ("nonnegative", "top_multiplicity_one", "support_below_top")})
        return cls(
            multisegment=ps(data["multisegment"]),
            result=result,
            poset_nodes=[ps(s) for s in data["poset"]["nodes"]],
            poset_edges=[(ps(u), ps(v)) for u, v in data["poset"]["edges"]],
            coefficients={ps(k): v for k, v in data["coefficients"].items()},
            m_matrix=data["m_matrix"],
            top=parse_partition(data["top"]),
            dual=ps(data["dual"]),
            dual_partition=parse_partition(data["dual_partition"]),
            flags=dict(data["flags"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "BranchReport":
        return cls.from_dict(json.loads(text))

    def __eq__(self, other):
        if not isinstance(other, BranchReport):
            return NotImplemented
        return self.to_dict() == other.to_dict()


def branch_report(a: Multisegment, cap: int | None = None) -> BranchReport:
    a = Multisegment(a)
    p = poset(a, cap)
    nodes = list(p.nodes)
    coeffs = expand_in_standard_basis(a, cap)
    result = branch(a, cap)
    mat = [[decomposition_number(b, c) for c in nodes] for b in nodes]
    dual = zelevinsky_dual(a)
    dual_part = conjugate(partition_P(dual))
    left, right = dimension_check(a, result, coeffs)
    support = result.support
    minimal = [mu for mu in support
               if not any(nu != mu and dominates(mu, nu) for nu in support)]
    flags = dict(result.certified_bounds)
    flags.update({
        "generic": is_pairwise_unlinked(a),
        "dimension_bookkeeping": left == right,
        "dual_partition_in_support": result.multiplicities[dual_part] > 0,
        "dual_partition_multiplicity": result.multiplicities[dual_part],
        "dual_partition_is_minimum": minimal == [dual_part],
        "m_backend": "kazhdan-lusztig (begin/end encoding)",
    })
    return BranchReport(a, result, nodes, list(p.edges), coeffs, mat,
                        partition_P(a), dual, dual_part, flags)
