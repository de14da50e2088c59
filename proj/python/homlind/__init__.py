"""Fourier-Galerkin homotopy lift with Lindblad-channel evolution.

The heavy lifting lives in the compiled extension ``homlind._core``; this
package re-exports its entry points:

- :func:`run` -- full pipeline for one configuration dict
- :func:`sweep` -- error-vs-order table sharing one reference solution
- :func:`dump_system` -- lifted block system as nested dicts
- :func:`check` -- seeded invariant suite
- :func:`presets` -- built-in parameter set names
- :func:`config_text` -- flat text form of a configuration
"""

from ._core import check, config_text, dump_system, presets, run, sweep

__all__ = ["check", "config_text", "dump_system", "presets", "run", "sweep"]
