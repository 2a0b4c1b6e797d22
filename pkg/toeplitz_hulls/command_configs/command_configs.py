COMMAND_CONFIGS = {}


#NOTE: help text lives here so it can be managed centrally and inherited by subclasses
from abc import ABCMeta
class CommandConfigMeta(type):
    def __new__(cls, name, bases, attrs):
        new_class = super().__new__(cls, name, bases, attrs)
        if name in COMMAND_CONFIGS:
            for key, value in COMMAND_CONFIGS[name].items():
                setattr(new_class, key, value)
        return new_class

class CombinedMeta(CommandConfigMeta, ABCMeta):
    pass

def add_command_config(command_name, config):
    COMMAND_CONFIGS[command_name] = config


CONSTRUCTION_FORMAT = """
Construction lines read `q=<p^m> kind=T|T' n=<int> a=<elt> b=<elt> [c=<elt>] inner=E|H (f=<poly>[;<poly>...] | k=<int>)`.
- Elements: `0`, `1`, `w`, `w^e` (w is the field generator) or integers for prime-subfield elements.
- Polynomials: terms `[coef*]x[^e]` joined by `+`, e.g. `w^2*x^4+x^3+x^2`.
- `c` defaults to `b` for `inner=E` and to `b^q` for `inner=H`; `kind` defaults to `T`.
- `modulus=<poly>` pins the primitive modulus of GF(p^m) (over GF(p), written in `x`).
"""

add_command_config("CommandBase", {
    "BOTTOM_DESCRIPTION": """
Global flags: `--budget` (largest enumerated message space), `--workers`, `--csv`, `--json`, `--show-matrix`, `--verbose`.
Exit codes: 0 success, 1 usage or parse error, 2 predicate/oracle disagreement, 3 table failure.
"""
})

add_command_config("ConstructionCommandBase", {
    "ADDITIONAL_INFO": CONSTRUCTION_FORMAT,
})

add_command_config("BuildCommand", {
    "TOP_DESCRIPTION": "Builds a derivative or power code from a construction line and reports [N,K,D], hull dimension, LCD and FSD status, the Griesmer defect and the spectral verdict.",
    "BASE_DESCRIPTION": """
##Parameters
- `spec`: the construction line.
- `--distribution`: also print the full weight distribution as `i,A_i` rows.
"""
})

add_command_config("EigCommand", {
    "TOP_DESCRIPTION": "Prints the closed-form spectrum of T_n(a,b,c) or T'_n(a,b,c): the split n+1 = p^r(m+1), the working extension field and every eigenvalue with its multiplicity.",
    "BASE_DESCRIPTION": """
##Parameters
- `spec`: a construction line; `f` and `k` are ignored. Needs b*c != 0.
"""
})

add_command_config("TablesCommand", {
    "TOP_DESCRIPTION": "Re-derives the embedded code tables and marks each row PASS, FAIL, SKIP or ERRATUM against the printed parameters.",
    "BASE_DESCRIPTION": """
##Parameters
- `table`: table number 1-6, or `all`.
  - 1: binary Euclidean, t=2 (LCD and FSD)
  - 2: binary Euclidean, t=3 (LCD)
  - 3: ternary Euclidean, t=2 (LCD and FSD)
  - 4: ternary Euclidean, t=3 (LCD)
  - 5: quaternary Hermitian, t=2 (LCD and FSD)
  - 6: quaternary Hermitian, t=3 (LCD)
Rows whose message space exceeds the budget are marked SKIP.
Printed rows known to give a non-LCD code (table 3, n=11: hull 2) are marked ERRATUM
when the parameters match and the hull is the recorded one; they do not fail the run.
"""
})

add_command_config("SearchCommand", {
    "TOP_DESCRIPTION": "Searches polynomial tuples for LCD derivative codes of large minimum distance over a fixed tridiagonal matrix.",
    "BASE_DESCRIPTION": """
##Parameters
- `--q`, `--n`, `--a`, `--b`, `--c`, `--kind`, `--inner`: the field and the matrix.
- `--t`: code index; t-1 polynomials are searched.
- `--degree`: largest polynomial degree.
- `--coefficients`: comma separated coefficient subset (default: the whole field).
- `--no-filter`: decide LCD with the Gram matrix instead of the spectral predicate.
- `--top`: rows printed.
Results are sorted by distance, ties broken by the smallest coefficient vector.
"""
})

add_command_config("CheckCommand", {
    "TOP_DESCRIPTION": "Runs the spectral predicate and the Gram-matrix oracle on one construction and compares them.",
    "BASE_DESCRIPTION": """
##Parameters
- `spec`: the construction line.
On disagreement the spectrum and the Gram matrix are dumped and the exit code is 2.
"""
})

add_command_config("ToeplitzHulls", {
    "TOP_DESCRIPTION": "Derivative and power codes from tridiagonal Toeplitz matrices over finite fields: parameters, hulls, LCD status and the published code tables.",
    "BASE_DESCRIPTION": "Run `toeplitz-hulls <command> --help` for the options of each command.",
})
