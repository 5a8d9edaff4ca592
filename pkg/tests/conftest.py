import json
import random
from pathlib import Path

import pytest

from glmp import default_model, parse_measures, parse_measures_file

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def model():
    return default_model()


@pytest.fixture(scope="session")
def worked_example(model):
    return parse_measures_file(FIXTURES / "video1.measures.json", model.schema)


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def random_measure_set(schema, rng: random.Random, video_id="synthetic"):
    """Uniform-random measure document over each measure's declared range."""
    values = {}
    for mdef in schema.measures:
        if mdef.kind == "categorical":
            values[mdef.id] = rng.choice(mdef.labels)
        else:
            lo, hi = mdef.range
            values[mdef.id] = round(rng.uniform(lo, hi), 4)
    doc = json.dumps({"video_id": video_id, "measures": values})
    return parse_measures(doc, schema)
