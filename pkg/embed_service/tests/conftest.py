"""Fixtures: a tiny randomly initialized BERT checkpoint built offline, so
tests exercise real tokenizer/model code paths without downloads."""

from __future__ import annotations

import json

import pytest
import torch
from transformers import BertConfig, BertModel, BertTokenizerFast

from vedsum_embed.encoder import SentenceEncoder
from vedsum_embed.models import ModelEntry

VOCAB = [
    "[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]",
    "gia", "gao", "xuat", "khau", "tang", "cao", "nhat", "hai", "nam",
    "mua", "lon", "ngap", "lut", "mien", "trung", "doi", "tuyen", "viet",
    "thang", "tran", "dau", "dan", "so", "tan", "bao", "du", "tru", "an",
    "ninh", "luong", "thuc", "nong", "san", "thi", "truong", "chau",
    "##s", "##ng", "##n", "the", "a", "b", "c", "d", "e",
]

TEN_SENTENCES = [
    ("c01/d1/0", "gia gao xuat khau tang cao nhat hai nam"),
    ("c01/d1/1", "mua lon gay ngap lut mien trung"),
    ("c01/d2/0", "doi tuyen viet nam thang tran dau"),
    ("c01/d2/1", "dan so tan den noi an toan"),
    ("c02/d1/0", "du bao mua lon hai ngay"),
    ("c02/d1/1", "an ninh luong thuc duoc dam bao"),
    ("c02/d2/0", "nong san viet nam ra thi truong chau au"),
    ("c02/d2/1", "gia gao tang cao"),
    ("c03/d1/0", "doi tuyen dan dau bang xep hang"),
    ("c03/d1/1", "mua lon gay ngap lut mien trung"),
]


@pytest.fixture(scope="session")
def tiny_model_dir(tmp_path_factory):
    root = tmp_path_factory.mktemp("tiny_model")
    vocab_file = root / "vocab.txt"
    vocab_file.write_text("\n".join(VOCAB) + "\n", encoding="utf-8")
    tokenizer = BertTokenizerFast(vocab_file=str(vocab_file), do_lower_case=True)
    torch.manual_seed(20240601)
    config = BertConfig(
        vocab_size=len(VOCAB),
        hidden_size=32,
        num_hidden_layers=2,
        num_attention_heads=4,
        intermediate_size=64,
        max_position_embeddings=64,
    )
    model = BertModel(config)
    model.eval()
    model.save_pretrained(root)
    tokenizer.save_pretrained(root)
    return root


@pytest.fixture(scope="session")
def tiny_entry(tiny_model_dir) -> ModelEntry:
    return ModelEntry(alias="tiny-test", hub_id=str(tiny_model_dir), max_tokens=16)


@pytest.fixture(scope="session")
def tiny_encoder(tiny_entry) -> SentenceEncoder:
    return SentenceEncoder(tiny_entry)


@pytest.fixture
def sentences_file(tmp_path):
    path = tmp_path / "sentences.jsonl"
    with path.open("w", encoding="utf-8") as fh:
        for key, text in TEN_SENTENCES:
            fh.write(json.dumps({"key": key, "text": text}) + "\n")
    return path
