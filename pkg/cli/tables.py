# cli/tables.py

"""Plain-text tables for the ``--format table`` output."""

import pandas as pd


def _cell(value):
    if isinstance(value, (list, tuple)):
        return ', '.join(_cell(v) for v in value)
    if isinstance(value, dict):
        return ', '.join(f"{k}={_cell(v)}" for k, v in value.items())
    if value is None:
        return '-'
    return str(value)


def records_table(records, columns=None):
    """One row per record; nested values are flattened to comma-separated text."""
    df = pd.DataFrame([{k: _cell(v) for k, v in record.items()} for record in records], columns=columns)
    if df.empty:
        return '(none)'
    return df.to_string(index=False)


def key_value_table(data, skip=()):
    rows = [{'field': key, 'value': _cell(value)} for key, value in data.items() if key not in skip]
    return pd.DataFrame(rows, columns=['field', 'value']).to_string(index=False)
