"""Commutator certificates over the twist alphabet.

Unlike the free-group expansions, equality here holds only modulo the
registered relations, so a certificate is paired with a proof script
whose replay through check_script is the certification.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .scripts import DerivationReport, ProofScript, check_script
from .twists import (
    CurveConfiguration,
    MappingMismatch,
    MappingSymbol,
    Step,
    TwistWord,
    default_configuration,
    invert_steps,
)


class TwistFactor(NamedTuple):
    """conjugator * [left, right] * conjugator^-1 over the twist alphabet."""

    conjugator: TwistWord
    left: TwistWord
    right: TwistWord

    def spelled(self) -> TwistWord:
        bracket = self.left * self.right * self.left.inverse() * self.right.inverse()
        return self.conjugator * bracket * self.conjugator.inverse()


class TwistCommutatorExpression(NamedTuple):
    factors: tuple[TwistFactor, ...]
    target: TwistWord

    def spelled(self) -> TwistWord:
        out = TwistWord()
        for f in self.factors:
            out = out * f.spelled()
        return out


class CertifiedExpression(NamedTuple):
    """A twist-alphabet certificate together with its replayable proof."""

    expression: TwistCommutatorExpression
    script: ProofScript
    config: CurveConfiguration
    report: DerivationReport

    @property
    def certified(self) -> bool:
        return self.report.accepted and self.report.value_preserving()


def four_twist_commutator(
    a: str, b: str, c: str, d: str,
    mapping: MappingSymbol,
    config: Optional[CurveConfiguration] = None,
) -> CertifiedExpression:
    """Certify ``t_a t_b^-1 t_c t_d^-1`` as the single commutator
    ``[t_a t_b^-1, m]`` for a mapping symbol m sending a to d and b to c.

    The certificate script spells the commutator out and removes the
    mapping symbol by naturality in three moves.
    """
    config = config or default_configuration()
    if mapping.image_of(a) != d or mapping.image_of(b) != c:
        raise MappingMismatch(
            f"mapping {mapping.name!r} must send {a}->{d} and {b}->{c}; "
            f"declared {dict(mapping.mapping)}"
        )
    cfg = config.with_mapping(mapping) if mapping.name not in config.mappings else config
    tw = cfg.twist_of_curve
    target = TwistWord([(tw[a], 1), (tw[b], -1), (tw[c], 1), (tw[d], -1)])
    factor = TwistFactor(
        TwistWord(),
        TwistWord([(tw[a], 1), (tw[b], -1)]),
        TwistWord([(mapping.name, 1)]),
    )
    expr = TwistCommutatorExpression((factor,), target)
    steps = (
        Step("free-insert", 4, f"{mapping.name}^-1"),
        Step("twist-naturality", 2, mapping.name),
        Step("twist-naturality", 3, mapping.name),
    )
    script = ProofScript(factor.spelled(), steps, target)
    report = check_script(script, cfg)
    return CertifiedExpression(expr, script, cfg, report)


# ---------------------------------------------------------------------------
# The tenth-power certificate
# ---------------------------------------------------------------------------

def chain_to_normal_form_steps() -> tuple[Step, ...]:
    """Moves proving  t4 t5 = t1 t_alpha t2^4 t1 t2^-1 t_beta t2^-1 t2^6.

    The derivation is value preserving: instead of conjugating the
    equation, an inverse pair is inserted up front and one twist is
    carried through the boundary twists by disjointness before the
    chain relation fires.
    """
    return (
        # rotation setup: t4 t5 -> t2^-1 t4 t5 t2
        Step("free-insert", 0, "t2^-1"),
        Step("commute", 1),
        Step("commute", 2),
        # chain relation, then regroup by braid moves
        Step("chain-substitute", 1),
        Step("commute", 3),
        Step("commute", 9),
        Step("braid", 1),
        Step("braid", 4),
        Step("braid", 7),
        Step("braid", 10),
        Step("free-cancel", 0),
        # fold the two defined curves back in
        Step("free-insert", 4, "t2^-1"),
        Step("free-insert", 5, "t2^-1"),
        Step("definition-substitute", 1, "alpha"),
        Step("free-insert", 7, "t2^-1"),
        Step("free-insert", 12, "t2^-1"),
        Step("free-insert", 13, "t2^-1"),
        Step("free-insert", 14, "t2^-1"),
        Step("definition-substitute", 8, "beta"),
        Step("free-insert", 9, "t2^-1"),
    )


def boundary_pair_script(config: Optional[CurveConfiguration] = None) -> ProofScript:
    """The replayable derivation of the two-bracket normal form."""
    config = config or default_configuration()
    return ProofScript(
        config.word("t4 t5"),
        chain_to_normal_form_steps(),
        config.word("t1 t_alpha t2^4 t1 t2^-1 t_beta t2^-1 t2^6"),
    )


def standard_mappings() -> tuple[MappingSymbol, MappingSymbol]:
    """The two declared coordinate changes used by the tenth-power proof."""
    g = MappingSymbol("g", (("a4", "a1"), ("alpha", "a5")))
    h = MappingSymbol("h", (("a1", "a2"), ("a2", "beta")))
    return g, h


def tenth_power_certificate(
    config: Optional[CurveConfiguration] = None,
) -> CertifiedExpression:
    """Certify ``t2^10`` as a product of two commutators.

    The factors are [t4 t_alpha^-1, g] and the t2^-6 conjugate of
    [h, t1 t2^-1], for declared mappings g: a4->a1, alpha->a5 and
    h: a1->a2, a2->beta.  The certificate script is produced by
    building the spelled-out certificate up from t2^10 with reversible
    moves and then playing the inverses; its replay by check_script is
    value preserving and lands exactly on t2^10.
    """
    config = config or default_configuration()
    g, h = standard_mappings()
    cfg = config.with_mapping(g).with_mapping(h)
    # The script is assembled against the standard relations; the caller's
    # configuration only governs the replay, so removing a relation there
    # makes certification fail at the step that needed it.
    builder = default_configuration().with_mapping(g).with_mapping(h)
    word = builder.word

    factor1 = TwistFactor(TwistWord(), word("t4 t_alpha^-1"), word("g"))
    factor2 = TwistFactor(word("t2^-6"), word("h"), word("t1 t2^-1"))
    target = word("t2^10")
    expr = TwistCommutatorExpression((factor1, factor2), target)

    # Build the spelled certificate up from t2^10.
    core = chain_to_normal_form_steps()
    _, reversed_core = invert_steps(word("t4 t5"), core, builder)
    buildup: list[Step] = [
        # t2^4 * Q * Q^-1 * t2^6 with Q = t1 t2^-1 t_beta t2^-1
        Step("free-insert", 4, "t1"),
        Step("free-insert", 5, "t2^-1"),
        Step("free-insert", 6, "t_beta"),
        Step("free-insert", 7, "t2^-1"),
    ]
    buildup += [Step("free-insert", 8 + i, "t2") for i in range(6)]
    buildup += [
        # wrap with t_alpha^-1 t1^-1 ... so the normal form appears
        Step("free-insert", 0, "t_alpha^-1"),
        Step("free-insert", 1, "t1^-1"),
    ]
    buildup += [Step(s.move, s.position + 2, s.data) for s in reversed_core]
    buildup += [
        # unfold alpha, pull the boundary twists to the front, refold
        Step("definition-substitute", 0, "alpha"),
        Step("commute", 5),
        Step("commute", 4),
        Step("commute", 3),
        Step("commute", 2),
        Step("commute", 1),
        Step("commute", 0),
        Step("commute", 6),
        Step("definition-substitute", 1, "alpha"),
        # reinstate the mapping symbols by naturality
        Step("twist-naturality", 2, "g"),
        Step("twist-naturality", 5, "g"),
        Step("free-cancel", 4),
        Step("twist-naturality", 12, "h"),
        Step("twist-naturality", 15, "h"),
        Step("free-cancel", 14),
    ]
    spelled, steps = invert_steps(target, buildup, builder)
    if spelled != expr.spelled():
        raise AssertionError("certificate build-up does not spell the expression")
    script = ProofScript(spelled, tuple(steps), target)
    report = check_script(script, cfg)
    return CertifiedExpression(expr, script, cfg, report)
