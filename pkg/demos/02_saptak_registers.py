# %% [markdown]
# # Three saptaks on a keyboard
#
# Mandra, madhya and tar saptak around a C4 sa, with the Western name of
# every key.

# %%
from saptak.sargam import note_token
from saptak.swara import SWARAS, Tonic, register_name, swara_frequency, western_name

sa = Tonic.parse("C4")
for register in (-1, 0, 1):
    for s in SWARAS:
        hz = swara_frequency(sa, s, register)
        print(f"{western_name(sa, s, register):4s} {hz:8.2f}  {note_token(s, register):3s} {register_name(register)}")

# %% [markdown]
# Any sa is allowed.  Off the A440 lattice there are no Western names.

# %%
from saptak.errors import NotOnKeyboard

sa = Tonic(300.0)
print([round(swara_frequency(sa, s), 2) for s in SWARAS])
try:
    western_name(sa, SWARAS[0])
except NotOnKeyboard as exc:
    print("no name:", exc)
