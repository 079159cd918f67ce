"""Shared exception types."""


class SchemaError(ValueError):
    """A JSON document does not match its expected schema.

    The message names the offending field so command-line users can fix
    their input files.  Distinct from plain ValueError so the CLI can map
    malformed input (exit 2) separately from violated preconditions
    (exit 3).
    """
