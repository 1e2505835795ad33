# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: percent
#       format_version: '1.3'
# ---

# %% [markdown]
# # Sesqui-categories and the command line
#
# Enriching over (Cat, □) gives hom-categories with whiskering on both sides
# and no interchange law.  In the free example the two horizontal composites
# of a pair of 2-cells differ.

# %%
from freeprod.sesqui import check_interchange, free_whiskerable_pair, validate_sesqui

S = free_whiskerable_pair()
print(validate_sesqui(S).ok)
rep = check_interchange(S)
print(rep.ok, [str(v) for v in rep.violations])

# %% [markdown]
# The same checks are available from the shell; each run prints JSON lines
# ending with a verdict.

# %%
from pathlib import Path

from freeprod.cli import CliConfig, cli_run

data = Path("data") if Path("data").exists() else Path(__file__).resolve().parent.parent / "data"
status, text = cli_run(CliConfig("funny", None, [str(data / "walking_arrow.catspec")] * 2, bound=4))
print(status)
print(text.splitlines()[-1])
