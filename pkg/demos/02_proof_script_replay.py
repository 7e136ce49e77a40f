"""Walkthrough: replaying a twist-word derivation move by move.

Run:  python demos/02_proof_script_replay.py
"""

from importlib import resources

from twistscl import ProofScript, Step, check_script, default_configuration, parse_script

config = default_configuration()

print("=" * 70)
print("The registered relation tables")
print("=" * 70)
print(f"  braid pairs:    {sorted(tuple(sorted(p)) for p in config.braid_pairs)}")
print(f"  disjoint pairs: {sorted(tuple(sorted(p)) for p in config.disjoint_pairs)}")
for left, right in config.chain_relations:
    print(f"  chain:          {left} = {right}")
for curve, (image_of, by) in sorted(config.definitions.items()):
    print(f"  definition:     {curve} is the image of {image_of} under {by}")

print()
print("=" * 70)
print("Replaying the shipped derivation")
print("=" * 70)

text = resources.files("twistscl").joinpath("data/tenth_power.script").read_text()
script, cfg = parse_script(text, config)
report = check_script(script, cfg)
print(f"  source:  {script.source}")
print(f"  claim:   {script.claimed}")
print(f"  steps:   {len(script.steps)}")
print(f"  accepted: {report.accepted}  (value preserving: {report.value_preserving()})")
print("\n  every intermediate word:")
for record in report.records:
    print(f"    {record.index:2d}  {str(record.step):38s} {record.word}")

print()
print("=" * 70)
print("A broken derivation is pinpointed, not just rejected")
print("=" * 70)

mutant = ProofScript(script.source, (Step("braid", 0),) + script.steps, script.claimed)
bad = check_script(mutant, cfg)
index, reason = bad.failure
print(f"  accepted: {bad.accepted}")
print(f"  first failing step: {index} ({reason})")

disjoint_braid = ProofScript(
    cfg.word("t1 t3 t1"), (Step("braid", 0),), cfg.word("t3 t1 t3")
)
bad = check_script(disjoint_braid, cfg)
print(f"  braid on a disjoint pair: accepted={bad.accepted} ({bad.failure[1]})")
