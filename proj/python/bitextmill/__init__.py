"""Parallel corpus mining toolkit: segmentation, subword vocabularies,
MT-assisted document and sentence alignment, filtering and English-pivot
compilation. The heavy lifting lives in the C++ extension."""

from bitextmill._core import (  # noqa: F401
    DataError,
    BleuScore,
    Fraction,
    SubwordModel,
    Vocabulary,
    anchor_align,
    apply_filter_policy,
    build_vocab,
    classify_char,
    compile_records,
    corpus_bleu,
    expected_script,
    extract_text,
    grid_counts,
    load_subword,
    modified_precision,
    nfc,
    normalize_key,
    oov_rate,
    script_purity,
    sentence_bleu,
    sentence_profile,
    split_sentences,
    subword_decode,
    train_subword,
    word_tokenize,
)

__version__ = "1.0.0"
