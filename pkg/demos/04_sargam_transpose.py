# %% [markdown]
# # Transposing a sargam melody

# %%
from saptak.sargam import event_frequencies, format_melody, parse_melody, transpose_melody

text = """
@tonic C3
s r g m p:2 -  # first phrase
p d n s':2
"""
melody = parse_melody(text)
print(format_melody(melody))

# %% [markdown]
# Scale change: same tokens, new sa.

# %%
up = transpose_melody(melody, "scale-change", 5)
print(format_melody(up))

# %% [markdown]
# Murchhana from re: the keys stay, the spelling becomes Kafi.

# %%
kafi = transpose_melody(melody, "murchhana", 1)
print(format_melody(kafi))
for before, after in zip(event_frequencies(melody), event_frequencies(kafi)):
    print(before and round(before, 2), after and round(after, 2))
