"""Structural verdicts (circle, surface, plane, symmetric subgroup) and their
cross-check against the algebraic pipeline and the oracle."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .complex import SimplicialComplex, is_projective_plane, is_sphere
from .decomposition import is_graph
from .embedding import EmbeddingCheck, check_circle, check_plane, check_surface, validate_witness
from .errors import ExcludedCase, GuardFailed, OracleBudgetExceeded, SpecialSurface
from .homology import h1_braid
from .oracle import oracle_h1
from .reduction import is_excluded_ball

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GUARD = 2
EXIT_DISCREPANCY = 3


@dataclass(frozen=True)
class Verdict:
    circle: EmbeddingCheck
    surface: EmbeddingCheck
    plane: EmbeddingCheck
    symmetric_subgroup: bool
    algebraic_concurrence: bool | None = None

    def summary(self) -> dict:
        return {
            "circle": self.circle.answer,
            "surface": self.surface.answer,
            "plane": self.plane.answer,
            "symmetric_subgroup": "yes" if self.symmetric_subgroup else "no",
        }

    def to_json(self) -> dict:
        out = self.summary()
        out["witnesses"] = {
            "circle": self.circle.to_json(),
            "surface": self.surface.to_json(),
            "plane": self.plane.to_json(),
        }
        out["algebraic_concurrence"] = self.algebraic_concurrence
        return out


def verdict_circle(X: SimplicialComplex) -> EmbeddingCheck:
    return check_circle(X)


def verdict_surface(X: SimplicialComplex) -> EmbeddingCheck:
    return check_surface(X)


def verdict_plane(X: SimplicialComplex) -> EmbeddingCheck:
    return check_plane(X)


def verdict_symmetric(X: SimplicialComplex, n: int = 2) -> bool:
    """The symmetric group embeds in the braid group exactly when X is not a surface."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return check_surface(X).answer == "no"


def verdict(X: SimplicialComplex, n: int = 2) -> Verdict:
    if not X.is_connected:
        raise GuardFailed("complex is connected")
    surf = check_surface(X)
    return Verdict(check_circle(X), surf, check_plane(X), surf.answer == "no")


# -- cross-check ----------------------------------------------------------------


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self):
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


@dataclass
class CrosscheckReport:
    name: str
    fingerprint: str
    n: int
    verdict: Verdict
    pipeline: object
    oracle: object = None
    checks: list = field(default_factory=list)

    @property
    def concordant(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.concordant else EXIT_DISCREPANCY

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "fingerprint": self.fingerprint,
            "n": self.n,
            "verdict": self.verdict.summary(),
            "pipeline_h1": self.pipeline.value.to_json(),
            "oracle_h1": self.oracle.to_json() if self.oracle is not None else None,
            "checks": [c.to_json() for c in self.checks],
            "concordant": self.concordant,
        }

    def to_text(self) -> str:
        lines = [f"{self.name} [{self.fingerprint}] n={self.n}"]
        lines += [f"  {k}: {v}" for k, v in self.verdict.summary().items()]
        lines.append(f"  pipeline H1: {self.pipeline.value}")
        if self.oracle is not None:
            lines.append(f"  oracle H1:   {self.oracle}")
        for c in self.checks:
            lines.append(f"  [{'ok' if c.ok else 'FAIL'}] {c.name} {c.detail}".rstrip())
        lines.append("concordant" if self.concordant else "DISCREPANCY")
        return "\n".join(lines)


def reject_special(X: SimplicialComplex) -> None:
    if is_excluded_ball(X):
        raise ExcludedCase("complex is not the 3-ball",
                           "its 2-skeleton is a 2-sphere, so the braid equivalence fails")
    Y = X.skeleton(2)
    if X.dim == 2 and (is_sphere(Y) or is_projective_plane(Y)):
        raise SpecialSurface("complex is not S^2 or RP^2",
                             "these surfaces have braid groups with torsion")


def crosscheck(X: SimplicialComplex, n: int = 2, oracle: bool = True,
               oracle_limit: int = 200_000) -> CrosscheckReport:
    """Check the verdicts against the H1 pipeline (and the oracle for graphs)."""
    reject_special(X)
    v = verdict(X, n)
    cert = h1_braid(X, n)
    tf = cert.value.torsion_free
    rep = CrosscheckReport(X.name or "complex", X.fingerprint, n, v, cert)
    rep.checks.append(Check("certificate recomputes", cert.verify()))
    for label, chk in (("circle", v.circle), ("surface", v.surface), ("plane", v.plane)):
        rep.checks.append(Check(f"{label} witness valid", validate_witness(X, chk), chk.witness_kind))
    if n >= 2:
        rep.checks.append(Check("plane iff torsion-free", bool(v.plane) == tf,
                                f"plane={v.plane.answer} H1={cert.value}"))
        if v.surface.answer == "no":
            rep.checks.append(Check("non-surface has torsion", not tf, f"H1={cert.value}"))
    if oracle and is_graph(X):
        try:
            rep.oracle = oracle_h1(X, n, limit=oracle_limit)
        except OracleBudgetExceeded as exc:
            rep.checks.append(Check("oracle within budget", True, f"skipped: {exc}"))
        else:
            rep.checks.append(Check("pipeline equals oracle", rep.oracle == cert.value,
                                    f"oracle={rep.oracle}"))
    rep.verdict = replace(v, algebraic_concurrence=rep.concordant)
    return rep
