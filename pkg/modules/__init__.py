"""
Projection groupoids of line configurations over number fields.
"""
