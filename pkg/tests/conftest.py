import pytest

from coorbital.curve import trace_curve

import table_data


@pytest.fixture(scope="session")
def traced_tables():
    """Trace each band once over its reference theta2 grid."""
    return {
        "D1": trace_curve("D1", table_data.GRID_D1),
        "D2": trace_curve("D2", table_data.GRID_D2),
        "D3": trace_curve("D3", table_data.GRID_D3),
    }
