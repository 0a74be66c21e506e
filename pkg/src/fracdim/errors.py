"""Exception hierarchy. Every error carries a stable machine-readable ``code``."""


class FracdimError(Exception):
    code = "error"

    def __init__(self, detail=""):
        super().__init__(detail)
        self.detail = detail


class DisconnectedGraph(FracdimError):
    code = "disconnected_graph"


class SizeLimit(FracdimError):
    code = "size_limit"


class InvalidParameter(FracdimError, ValueError):
    code = "invalid_parameter"


class GraphFormatError(FracdimError, ValueError):
    code = "invalid_graph"


class EqualVertices(FracdimError, ValueError):
    code = "equal_vertices"


class IndexOutOfRange(FracdimError, IndexError):
    code = "index_out_of_range"


class MalformedLP(FracdimError):
    code = "malformed_lp"


class CertificateFailure(FracdimError):
    code = "certificate_failure"


class NotVertexTransitive(FracdimError):
    code = "not_vertex_transitive"


class DegenerateGraph(FracdimError):
    code = "degenerate_graph"


class HypothesisNotMet(FracdimError):
    code = "hypothesis_not_met"
