"""
A full kitchen session, end to end
==================================

Generate a seeded kitchen scenario, run it headless with the built-in
scripted learner, and look at what comes out: a finalized telemetry
log, a session report, and a binaural WAV of everything the learner
heard. Run it twice with the same seeds and every byte repeats.
"""

from pathlib import Path

from sonotrain.scenarios import DifficultyParams, generate
from sonotrain.session import SessionConfig, run_session
from sonotrain.telemetry import export

out_dir = Path(__file__).resolve().parent / "demo_out"
out_dir.mkdir(exist_ok=True)

script = generate("kitchen", DifficultyParams(), seed=42, duration_s=180.0)
print(f"script {script.content_hash[:12]}: {len(script.events)} events, "
      f"{len(script.sources)} sources, {len(script.tasks)} tasks")

config = SessionConfig(script=script, seed=7)
result = run_session(config, wav_path=out_dir / "kitchen_session.wav")

r = result.report
print(f"final state {result.final_state.name}, "
      f"rendered {result.rendered_s:.0f} s of audio")
print(f"cues: {r.cue_count} emitted, "
      f"{100 * (r.below_threshold_fraction or 0):.0f}% below the "
      f"audibility margin")
reaction = (f"{r.median_reaction_s:.2f} s" if r.median_reaction_s is not None
            else "n/a")
print(f"tasks: success rate {r.success_rate:.2f}, "
      f"median reaction {reaction}")

# the log is an append-only event stream; show the oil timeline
print("\noil state and its rare events:")
for event in result.log.events:
    if event.kind == "safety_event" and event.get("state"):
        print(f"  {event.time_s:7.2f}  oil -> {event.get('state')}")
    elif event.kind == "safety_event" and event.get("type") == "oil_pop":
        print(f"  {event.time_s:7.2f}  oil_pop!")

# canonical export is the replay/diff format the tooling consumes
log_path = out_dir / "kitchen_telemetry.jsonl"
log_path.write_bytes(export(result.log, canonical=True))
print(f"\nwrote {log_path.name} and kitchen_session.wav to {out_dir}")
