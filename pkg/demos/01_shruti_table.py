# %% [markdown]
# # Shrutis against equal temperament
#
# The 21 tabulated shrutis are exact ratios.  Realising them on a C4 sa and
# setting each beside the tempered note on the same row shows how small the
# gap is for the seven shuddha swaras.

# %%
from saptak.pitch import SHRUTIS, deviation_cents, ratio_to_cents, shruti_table

for row in shruti_table():
    e = row.entry
    ets = "" if row.ets_hz is None else f"{row.ets_hz:9.4f}"
    print(f"{e.name:11s} {str(e.ratio):>8s} {row.just_hz:9.4f} {e.western_note or '':2s} {ets}")

# %% [markdown]
# Cents make the comparison independent of the base frequency.

# %%
for e in SHRUTIS:
    if e.swara_label:
        print(f"{e.swara_label:3s} {ratio_to_cents(e.ratio):8.3f}  {deviation_cents(e.ratio, e.ets_steps):+7.3f}")

# %% [markdown]
# The same table as CSV, ready for a spreadsheet:

# %%
from saptak.pitch import shruti_table_csv

print(shruti_table_csv()[:300])
