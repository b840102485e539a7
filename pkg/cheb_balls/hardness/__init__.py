from .partition import (  # noqa: F401
    LemmaReport,
    PartitionInput,
    check_lemma_cp,
    lemma_sweep,
    partition_bruteforce,
    random_partition_inputs,
    reduce_to_p0,
)
