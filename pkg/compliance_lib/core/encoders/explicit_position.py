from ...enums import EncodingKindEnum
from .baseline import BaselineEncoder


class ExplicitPositionEncoder(BaselineEncoder):
    """Baseline nodes without the directly_follows relation; order is
    carried by the position property of each event node."""
    encoding = EncodingKindEnum.EP
    with_directly_follows = False
