"""
A first binaural render
=======================

Place one looping tone in the world, walk it around the listener's
head, and write the result as a stereo 24-bit WAV. Listen with
headphones: the source should sweep left to right in front of you,
then fade with distance as it recedes.
"""

import math
from pathlib import Path

import numpy as np

from sonotrain.geometry import DirectionHR, Pose, Vec3
from sonotrain.scaffold import ResolvedSource, SceneSnapshot
from sonotrain.spatial import BinauralRenderer, Feed, RenderParams, itd
from sonotrain.wavio import write_wav24

out_dir = Path(__file__).resolve().parent / "demo_out"
out_dir.mkdir(exist_ok=True)

params = RenderParams()
renderer = BinauralRenderer(params)
rate = params.sample_rate
dt = params.block_duration

# the renderer pulls samples from feeds keyed by source id
seconds = 8.0
t = np.arange(int(seconds * rate)) / rate
feeds = {"probe": Feed(0.35 * np.sin(2 * np.pi * 660.0 * t), loop=True)}

# a half-circle in front of the listener, then straight away
listener = Pose(Vec3(0.0, 0.0, 1.6))


def probe_position(time_s):
    if time_s < 5.0:
        az = math.pi * (time_s / 5.0 - 0.5)   # -90 deg .. +90 deg
        return Vec3(2.0 * math.sin(az), 2.0 * math.cos(az), 1.6)
    return Vec3(0.0, 2.0 + 6.0 * (time_s - 5.0) / 3.0, 1.6)


blocks = []
n_blocks = int(seconds / dt)
for k in range(n_blocks):
    now = k * dt
    src = ResolvedSource(id="probe", payload="tone", gain_db=-6.0,
                         loop=True, position=probe_position(now),
                         velocity=Vec3(0.0, 0.0, 0.0), active_start_s=0.0)
    snap = SceneSnapshot(time=now, listener=listener, sources=(src,))
    blocks.append(renderer.render_block(snap, feeds))

stereo = np.stack([np.concatenate([b.left for b in blocks]),
                   np.concatenate([b.right for b in blocks])], axis=1)
wav = out_dir / "binaural_hello.wav"
write_wav24(wav, stereo, rate)
print(f"wrote {wav} ({stereo.shape[0] / rate:.1f} s)")

# the interaural time difference the sweep rides on, at three azimuths
for deg in (15, 45, 90):
    delay = itd(DirectionHR(math.radians(deg)), params)
    print(f"  itd at {deg:2d} deg: {delay * 1e6:7.1f} us")
