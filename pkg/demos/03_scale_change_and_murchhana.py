# %% [markdown]
# # Two ways to move sa
#
# A scale change multiplies every frequency by the same factor.  A murchhana
# re-anchors sa on another shuddha degree and keeps the keys, which changes
# the thaat.

# %%
from saptak.murchhana import scale_change, scale_change_table
from saptak.sargam import note_token
from saptak.swara import Tonic

c2 = Tonic.parse("C2")
for label, steps in (("F", 5), ("A", 9), ("B_flat", 10)):
    print(label, round(scale_change(c2, steps).sa_frequency, 3))

# %%
tonics = [scale_change(c2, k) for k in (12, 5, 9, 10)]
rows = scale_change_table(tonics, 36, 60, spans=[(-1, 0), (0, 0), (0, 0), (0, 0)])
for row in rows:
    cells = ["" if c is None else note_token(*c) for c in row.cells]
    print(f"{row.hz:8.3f}  " + "  ".join(f"{c:3s}" for c in cells))

# %% [markdown]
# Sliding the pure saptak one slot at a time:

# %%
from saptak.murchhana import enumerate_murchhanas, murchhana_grid

print(murchhana_grid())
for o in enumerate_murchhanas():
    if o.accepted:
        print(o.shift, o.hindustani_name, o.carnatic_name, [str(s) for s in o.vikrita])
    else:
        print(o.shift, "rejected:", o.reason)
