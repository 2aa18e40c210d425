from pyfixpoint.documents.instance import (
    FiniteDocument,
    InstanceDocument,
    IntervalDocument,
    dump_document,
    export_instance,
    from_document,
    load_instance,
    parse_document,
    to_document,
)
from pyfixpoint.documents.report import (
    CertificateSection,
    ExpectedSection,
    InstanceEcho,
    ReportDocument,
    SolveSection,
    format_element,
    format_float,
)

__all__ = [
    "CertificateSection",
    "ExpectedSection",
    "FiniteDocument",
    "InstanceDocument",
    "InstanceEcho",
    "IntervalDocument",
    "ReportDocument",
    "SolveSection",
    "dump_document",
    "export_instance",
    "format_element",
    "format_float",
    "from_document",
    "load_instance",
    "parse_document",
    "to_document",
]
