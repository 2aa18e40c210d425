from pyfixpoint.gallery.entries import (
    ENTRIES,
    Expected,
    GalleryEntry,
    abs_half,
    antichain_identity,
    chain_constant,
    entry_names,
    identity_quarter,
    lookup,
    metric_embedding,
    paper_example,
    random_entry,
)
from pyfixpoint.gallery.oracle import brute_force_fixed_point, brute_force_orbit
from pyfixpoint.gallery.random_finite import MAX_SIZE, clamp_to_p4, random_finite_instance

__all__ = [
    "ENTRIES",
    "MAX_SIZE",
    "Expected",
    "GalleryEntry",
    "abs_half",
    "antichain_identity",
    "brute_force_fixed_point",
    "brute_force_orbit",
    "chain_constant",
    "clamp_to_p4",
    "entry_names",
    "identity_quarter",
    "lookup",
    "metric_embedding",
    "paper_example",
    "random_entry",
    "random_finite_instance",
]
