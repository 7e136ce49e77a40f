"""Proof scripts: replayable derivations in the twist-word rewriting system.

A script names a source word, a list of moves, and a claimed result.
``check_script`` replays the moves and accepts only when every move
applies and the final word equals the claim symbol for symbol.  The
``conjugate-equation`` move changes the value being tracked, so the
report also exposes the accumulated conjugator: an accepted script
certifies  claimed = C * source * C^-1  modulo the registered
relations, with C the (symbolically reduced) product of the applied
conjugators; C is empty for value-preserving derivations.

Text format (line oriented, ``#`` starts a comment):

    map <name> <curve>-><curve> [<curve>-><curve> ...]
    let <name> = <twist word>
    step <move> @<position> [<data>]
    claim <twist word>

A binding named ``source`` is required.  Bound names can be used as
tokens (optionally ``^-1``) inside later words.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .twists import (
    CurveConfiguration,
    MappingSymbol,
    MoveError,
    MOVE_KINDS,
    Step,
    TwistWord,
    apply_step,
)


class ProofScript(NamedTuple):
    source: TwistWord
    steps: tuple[Step, ...]
    claimed: TwistWord


class StepRecord(NamedTuple):
    index: int
    step: Step
    word: TwistWord


class DerivationReport(NamedTuple):
    accepted: bool
    source: TwistWord
    claimed: TwistWord
    final: Optional[TwistWord]
    records: tuple[StepRecord, ...]
    failure: Optional[tuple[int, str]]
    conjugator: TwistWord

    def value_preserving(self) -> bool:
        return not self.conjugator.symbols


def check_script(script: ProofScript, config: CurveConfiguration) -> DerivationReport:
    """Replay a script; accept iff all moves apply and the claim is exact."""
    word = script.source
    records: list[StepRecord] = []
    conjugator = TwistWord()
    for i, step in enumerate(script.steps):
        try:
            word = apply_step(word, step, config)
        except MoveError as err:
            return DerivationReport(
                False, script.source, script.claimed, None,
                tuple(records), (i, str(err)), conjugator.reduce(),
            )
        if step.move == "conjugate-equation":
            conjugator = (TwistWord.parse(step.data, config) * conjugator).reduce()
        records.append(StepRecord(i, step, word))
    if word != script.claimed:
        return DerivationReport(
            False, script.source, script.claimed, word, tuple(records),
            (len(script.steps), f"final word {word} differs from the claim"),
            conjugator.reduce(),
        )
    return DerivationReport(
        True, script.source, script.claimed, word, tuple(records), None,
        conjugator.reduce(),
    )


# ---------------------------------------------------------------------------
# Parsing and serializing
# ---------------------------------------------------------------------------

class ScriptSyntaxError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _expand_bindings(
    text: str, bindings: dict[str, TwistWord], config: CurveConfiguration, line_no: int
) -> TwistWord:
    symbols: list = []
    for token in text.split():
        name, _, exp = token.partition("^")
        if name in bindings:
            if exp not in ("", "-1", "1"):
                raise ScriptSyntaxError(line_no, f"binding power must be +-1: {token!r}")
            bound = bindings[name]
            symbols.extend((bound if exp != "-1" else bound.inverse()).symbols)
        else:
            try:
                symbols.extend(TwistWord.parse(token, config).symbols)
            except ValueError as err:
                raise ScriptSyntaxError(line_no, str(err)) from None
    return TwistWord(symbols)


def parse_script(
    text: str, config: CurveConfiguration
) -> tuple[ProofScript, CurveConfiguration]:
    """Parse script text; returns the script and the configuration
    extended by any ``map`` declarations."""
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    bindings: dict[str, TwistWord] = {}
    steps: list[Step] = []
    claimed: Optional[TwistWord] = None
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "map":
            name, _, pairs_text = rest.partition(" ")
            if not name or not pairs_text:
                raise ScriptSyntaxError(line_no, "map needs a name and curve pairs")
            pairs = []
            for chunk in pairs_text.split():
                src, arrow, dst = chunk.partition("->")
                if not arrow or not src or not dst:
                    raise ScriptSyntaxError(line_no, f"malformed pair {chunk!r}")
                pairs.append((src, dst))
            try:
                config = config.with_mapping(MappingSymbol(name, tuple(pairs)))
            except ValueError as err:
                raise ScriptSyntaxError(line_no, str(err)) from None
        elif head == "let":
            name, eq, body = rest.partition("=")
            name = name.strip()
            if not eq or not name:
                raise ScriptSyntaxError(line_no, "let needs `let <name> = <word>`")
            if name in bindings:
                raise ScriptSyntaxError(line_no, f"binding {name!r} redefined")
            bindings[name] = _expand_bindings(body.strip(), bindings, config, line_no)
        elif head == "step":
            parts = rest.split(None, 2)
            if len(parts) < 2 or not parts[1].startswith("@"):
                raise ScriptSyntaxError(line_no, "step needs `step <move> @<index> [data]`")
            move = parts[0]
            if move not in MOVE_KINDS:
                raise ScriptSyntaxError(line_no, f"unknown move {move!r}")
            try:
                position = int(parts[1][1:])
            except ValueError:
                raise ScriptSyntaxError(line_no, f"bad position {parts[1]!r}") from None
            steps.append(Step(move, position, parts[2].strip() if len(parts) > 2 else ""))
        elif head == "claim":
            if claimed is not None:
                raise ScriptSyntaxError(line_no, "duplicate claim")
            claimed = _expand_bindings(rest, bindings, config, line_no)
        else:
            raise ScriptSyntaxError(line_no, f"unknown directive {head!r}")
    if "source" not in bindings:
        raise ScriptSyntaxError(0, "script must bind `source`")
    if claimed is None:
        raise ScriptSyntaxError(0, "script must end with a claim")
    return ProofScript(bindings["source"], tuple(steps), claimed), config


def serialize_script(
    script: ProofScript, header: str = "", mappings: tuple[MappingSymbol, ...] = ()
) -> str:
    """Render a script in the text format (bindings are not reconstructed)."""
    lines = []
    if header:
        lines.extend(f"# {h}".rstrip() for h in header.split("\n"))
    for symbol in mappings:
        pairs = " ".join(f"{c}->{d}" for c, d in symbol.mapping)
        lines.append(f"map {symbol.name} {pairs}")
    lines.append(f"let source = {script.source}")
    lines.extend(str(step) for step in script.steps)
    lines.append(f"claim {script.claimed}")
    return "\n".join(lines) + "\n"
