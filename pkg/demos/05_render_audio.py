# %% [markdown]
# # Hearing the thaats
#
# Render each accepted murchhana of the pure saptak as an ascending scale.

# %%
from pathlib import Path

import numpy as np

from saptak.murchhana import enumerate_murchhanas
from saptak.sargam import Melody, MelodyEvent
from saptak.swara import SWARAS, Tonic
from saptak.synth import RenderConfig, render_melody, write_wav

out_dir = Path("rendered")
out_dir.mkdir(exist_ok=True)
cfg = RenderConfig(note_seconds=0.4)
sa = Tonic.parse("D3")

for thaat in enumerate_murchhanas():
    if not thaat.accepted:
        continue
    events = [MelodyEvent(s) for s in thaat.degrees] + [MelodyEvent(SWARAS[0], 1)]
    buf = render_melody(Melody(tuple(events), sa), cfg)
    path = out_dir / f"{thaat.shift}_{thaat.hindustani_name.lower()}.wav"
    write_wav(buf, path, cfg.sample_rate)
    print(path, buf.size, "samples")

# %% [markdown]
# A quick look at the spectrum of the first note.

# %%
first = buf[: int(cfg.note_seconds * cfg.sample_rate)]
spectrum = np.abs(np.fft.rfft(first, n=32768))
print("peak at", np.argmax(spectrum) * cfg.sample_rate / 32768, "Hz; sa is", sa.sa_frequency)
