"""
Slotting a cue into a noisy scene
=================================

The scheduler never turns a cue up to beat background noise. Instead it
listens to a short-time Bark-band profile of the ambient bed and slides
the cue to the window where the signal-to-masker ratio is best.

Here we synthesize a bed with a deliberate loud patch in the middle,
ask for a cue that may start anywhere in the first second, and watch
the scheduler route around the patch.
"""

import numpy as np

from sonotrain.assets import build_asset
from sonotrain.bark import band_of
from sonotrain.earcons import CueSemantic, default_lexicon
from sonotrain.masking import ScheduleRequest, band_analyze, schedule_cue

rate = 48000
rng = np.random.default_rng(7)

# two seconds of quiet bed with a loud patch sitting right on the
# cue's own critical band
bed = 0.05 * rng.standard_normal(2 * rate)
t = np.arange(2 * rate) / rate
burst = (t > 0.7) & (t < 1.3)
bed[burst] += 0.4 * np.sin(2 * np.pi * 850.0 * t[burst])

profile = band_analyze(bed, rate)
print(f"profile: {len(profile.frames)} windows of {profile.window_s * 1e3:.0f} ms "
      f"every {profile.hop_s * 1e3:.0f} ms")

lexicon = default_lexicon()
spec = lexicon.lookup(CueSemantic.protocol("check_in"))
print(f"cue: {spec.id}, carrier {spec.carrier_hz:.0f} Hz "
      f"-> Bark band {band_of(spec.carrier_hz)}, {spec.span_ms:.0f} ms")

request = ScheduleRequest("demo", spec, earliest_s=0.0, deadline_s=1.6)
decision = schedule_cue(request, profile)
print(f"scheduled at t={decision.start_s:.3f} s in band {decision.band}, "
      f"SMR {decision.smr_db:+.1f} dB")
assert not (0.7 < decision.start_s < 1.3), "should have dodged the burst"

# box the same cue into the burst and compare: the ratio collapses but
# the level is never touched
tight = ScheduleRequest("demo", spec, earliest_s=0.8, deadline_s=1.25)
worse = schedule_cue(tight, profile)
print(f"same cue boxed into the burst: SMR {worse.smr_db:+.1f} dB "
      f"({worse.smr_db - decision.smr_db:+.1f} dB worse)")
print(f"levels: free {decision.spec.level_db:+.1f} dB, "
      f"boxed {worse.spec.level_db:+.1f} dB")

# the beds real templates schedule against come from the asset bank
for name in ("traffic_hum", "fridge_hum"):
    feed = build_asset(name, rate)
    print(f"asset {name}: {feed.samples.size / rate:.1f} s loop, "
          f"peak {np.max(np.abs(feed.samples)):.3f}")
