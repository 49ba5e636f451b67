import pytest

from algoscope.dictionary import build_dictionary, load_dictionary, make_entry
from algoscope.resources import demo_corpus_path, seed_dictionary_path


@pytest.fixture(scope="session")
def seed_dictionary():
    return load_dictionary(seed_dictionary_path())


@pytest.fixture(scope="session")
def demo_corpus_file():
    return demo_corpus_path()


@pytest.fixture
def svm_dictionary():
    """Single-entry dictionary mirroring a classic multi-alias entry."""
    return build_dictionary(
        [
            make_entry(
                "support vector machine",
                [
                    "svm",
                    "svms",
                    "support vector machines",
                    "support-vector machine",
                    "support-vector machines",
                ],
                ["svm", "svms"],
                category="classification",
            )
        ]
    )
