"""
Domain errors and validation of user-supplied JSON.

Import from the submodules: ``src.validation.errors`` is loaded by the
arithmetic core, ``src.validation.input_validator`` depends on it.
"""
