import pytest

from hopfchrom import (
    FieldSpec,
    GroupTable,
    dual_group_algebra,
    field_make,
    group_algebra,
    normalized_pair,
    sweedler_h4,
    taft,
)


@pytest.fixture(scope="session")
def Q():
    return field_make(FieldSpec("rationals"))


@pytest.fixture(scope="session")
def F7():
    return field_make(FieldSpec("prime-field", p=7))


@pytest.fixture(scope="session")
def C4():
    return field_make(FieldSpec("cyclotomic", n=4))


@pytest.fixture(scope="session")
def corpus(Q, F7):
    """The six acceptance builtins, in a fixed order."""
    return [
        group_algebra(GroupTable.cyclic(2), Q, "group:Z2"),
        group_algebra(GroupTable.cyclic(3), Q, "group:Z3"),
        group_algebra(GroupTable.symmetric(3), Q, "group:S3"),
        dual_group_algebra(GroupTable.cyclic(2), Q, "dualgroup:Z2"),
        sweedler_h4(Q),
        taft(3, F7),
    ]


@pytest.fixture(scope="session")
def corpus_data(corpus):
    """Mapping algebra name -> (H, IntegralData)."""
    return {H.name: (H, normalized_pair(H)) for H in corpus}


@pytest.fixture(scope="session")
def z2(corpus):
    return corpus[0]


@pytest.fixture(scope="session")
def z3(corpus):
    return corpus[1]


@pytest.fixture(scope="session")
def s3(corpus):
    return corpus[2]


@pytest.fixture(scope="session")
def dz2(corpus):
    return corpus[3]


@pytest.fixture(scope="session")
def h4(corpus):
    return corpus[4]


@pytest.fixture(scope="session")
def t3(corpus):
    return corpus[5]
