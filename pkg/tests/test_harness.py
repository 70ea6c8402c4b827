"""Evaluation harness: aggregation, comparison tables, fingerprints."""

from __future__ import annotations

import json

import numpy as np
import pytest

from conftest import GOLDEN_DIR, build_corpus_tree
from vedsum.corpus import load_corpus
from vedsum.data import baselines_path
from vedsum.embed import EmbeddingMatrix, ProviderSpec, write_cache
from vedsum.errors import BatchErrors, DuplicateName
from vedsum.harness import (
    PublishedRow,
    compare,
    computed_row,
    corpus_fingerprint,
    evaluate,
    format_pct,
    load_baselines,
    render_comparison_md,
    render_report_md,
    report_payload,
    sweep_k,
)
from vedsum.rouge import rouge_n
from vedsum.summarize import SummarizerConfig

HASH256 = ProviderSpec.hashing(256)


def echo_corpus(tmp_path):
    """Each cluster's references equal its full concatenated text."""
    docs = {
        "c01": {"d1": "Một hai. Ba bốn.", "d2": "Năm sáu."},
        "c02": {"d1": "Bảy tám. Chín mười.", "d2": "Mười một."},
    }
    clusters = {}
    for cid, doc_map in docs.items():
        full = " ".join(doc_map[d] for d in sorted(doc_map))
        clusters[cid] = {"docs": doc_map, "refs": {"r1": full, "r2": "không liên quan"}}
    return load_corpus(build_corpus_tree(tmp_path, clusters))


class TestEvaluate:
    def test_reference_equal_to_full_text_scores_100(self, tmp_path):
        corpus = echo_corpus(tmp_path)
        report = evaluate(corpus, SummarizerConfig(provider=HASH256, k=50))
        assert report.avg_rouge1_f == 100.0
        assert format_pct(report.avg_rouge1_f) == "100.00"

    def test_singleton_corpus_average_equals_cluster_score(self, tmp_path):
        corpus = load_corpus(
            build_corpus_tree(
                tmp_path,
                {
                    "c01": {
                        "docs": {"d1": "Một hai ba. Bốn năm.", "d2": "Sáu bảy."},
                        "refs": {"r1": "Một hai ba.", "r2": "Tám chín."},
                    }
                },
            )
        )
        report = evaluate(corpus, SummarizerConfig(provider=HASH256, k=2))
        assert len(report.per_cluster) == 1
        assert report.avg_rouge1_f == 100.0 * report.per_cluster[0].rouge1.f1
        assert report.avg_rouge2_f == 100.0 * report.per_cluster[0].rouge2.f1

    def test_averages_recomputable(self, mini_corpus_root):
        corpus = load_corpus(mini_corpus_root)
        report = evaluate(corpus, SummarizerConfig(provider=HASH256))
        mean1 = 100.0 * sum(s.rouge1.f1 for s in report.per_cluster) / len(report.per_cluster)
        mean2 = 100.0 * sum(s.rouge2.f1 for s in report.per_cluster) / len(report.per_cluster)
        assert abs(report.avg_rouge1_f - mean1) <= 1e-9
        assert abs(report.avg_rouge2_f - mean2) <= 1e-9

    def test_best_f_dominates_each_reference(self, mini_corpus_root):
        corpus = load_corpus(mini_corpus_root)
        config = SummarizerConfig(provider=HASH256)
        report = evaluate(corpus, config)
        from vedsum.summarize import summarize_cluster

        for score in report.per_cluster:
            cluster = corpus.cluster(score.cluster_id)
            summary = summarize_cluster(cluster, config)
            for n, best in ((1, score.rouge1), (2, score.rouge2)):
                for ref in cluster.references:
                    single = rouge_n(summary.text, ref.text, n)
                    assert best.f1 >= single.f1

    def test_golden_payload(self, mini_corpus_root):
        golden = json.loads(
            (GOLDEN_DIR / "mini_report_payload.json").read_text(encoding="utf-8")
        )
        corpus = load_corpus(mini_corpus_root)
        report = evaluate(corpus, SummarizerConfig(provider=HASH256, k=4, seed=42))
        assert report_payload(report) == golden

    def test_deterministic_payload_bytes(self, mini_corpus_root):
        corpus = load_corpus(mini_corpus_root)
        config = SummarizerConfig(provider=HASH256, k=4, seed=42)
        first = json.dumps(report_payload(evaluate(corpus, config)), sort_keys=True)
        second = json.dumps(report_payload(evaluate(corpus, config)), sort_keys=True)
        assert first == second

    def test_partial_failure_recorded_not_fatal(self, tmp_path, mini_corpus_root):
        corpus = load_corpus(mini_corpus_root)
        rows = [
            (s.key, np.ones(4))
            for cluster in corpus.clusters
            for s in cluster.sentences()
            if cluster.cluster_id != "c03"
        ]
        cache_path = tmp_path / "partial.jsonl"
        write_cache(
            EmbeddingMatrix("p", 4, tuple(k for k, _ in rows), np.stack([v for _, v in rows])),
            cache_path,
        )
        report = evaluate(corpus, SummarizerConfig(provider=ProviderSpec.cache(cache_path)))
        assert {s.cluster_id for s in report.per_cluster} == {"c01", "c02"}
        assert set(report.failures) == {"c03"}

    def test_all_failures_raise_batch_errors(self, tmp_path, mini_corpus_root):
        corpus = load_corpus(mini_corpus_root)
        cache_path = tmp_path / "empty.jsonl"
        write_cache(EmbeddingMatrix("e", 2, ("z/z/0",), np.zeros((1, 2))), cache_path)
        with pytest.raises(BatchErrors):
            evaluate(corpus, SummarizerConfig(provider=ProviderSpec.cache(cache_path)))

    def test_hand_scored_cluster_cross_check(self, mini_corpus_root):
        # Independent verification of the golden report: recompute c01's
        # best-F with the brute-force oracle from the rouge tests.
        from test_rouge import oracle_prf
        from vedsum.rouge import tokenize_for_rouge
        from vedsum.summarize import summarize_cluster

        corpus = load_corpus(mini_corpus_root)
        config = SummarizerConfig(provider=HASH256, k=4, seed=42)
        report = evaluate(corpus, config)
        summary = summarize_cluster(corpus.cluster("c01"), config)
        cand_tokens = tokenize_for_rouge(summary.text)
        best_f = max(
            oracle_prf(cand_tokens, tokenize_for_rouge(ref.text), 1)[2]
            for ref in corpus.cluster("c01").references
        )
        assert report.per_cluster[0].cluster_id == "c01"
        assert report.per_cluster[0].rouge1.f1 == pytest.approx(best_f, abs=1e-12)


class TestSweepK:
    def test_clamping_on_tiny_clusters(self, tmp_path):
        import warnings

        root = build_corpus_tree(
            tmp_path,
            {"c01": {"docs": {"d1": "Chỉ một câu."}, "refs": {"r1": "x", "r2": "y"}}},
        )
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            corpus = load_corpus(root)
        results = sweep_k(corpus, SummarizerConfig(provider=HASH256), [1])
        assert results[0][0] == 1
        assert len(results[0][1].per_cluster) == 1

    def test_one_report_per_k_with_config_echo(self, mini_corpus_root):
        corpus = load_corpus(mini_corpus_root)
        results = sweep_k(corpus, SummarizerConfig(provider=HASH256), [2, 4, 6])
        assert [k for k, _ in results] == [2, 4, 6]
        assert [rep.config_echo.k for _, rep in results] == [2, 4, 6]
        seeds = {rep.config_echo.seed for _, rep in results}
        assert seeds == {42}

    def test_golden_score_curve(self, mini_corpus_root):
        golden = json.loads((GOLDEN_DIR / "sweep_k1_6.json").read_text(encoding="utf-8"))
        corpus = load_corpus(mini_corpus_root)
        results = sweep_k(
            corpus, SummarizerConfig(provider=HASH256, seed=42), [1, 2, 3, 4, 5, 6]
        )
        curve = [
            {"k": k, "avg_rouge1_f": rep.avg_rouge1_f, "avg_rouge2_f": rep.avg_rouge2_f}
            for k, rep in results
        ]
        assert curve == golden

    def test_rejects_bad_k_values(self, mini_corpus_root):
        corpus = load_corpus(mini_corpus_root)
        with pytest.raises(ValueError):
            sweep_k(corpus, SummarizerConfig(provider=HASH256), [])
        with pytest.raises(ValueError):
            sweep_k(corpus, SummarizerConfig(provider=HASH256), [0, 2])


class TestCompare:
    def test_computed_row_ranks_above_published(self):
        table = compare(
            [computed_row("our-run", 77.44, 52.01)],
            [PublishedRow("CFVi-2", 76.38, 49.43, "feature-ranking system")],
        )
        assert table.rows[0].name == "our-run"
        assert table.rows[0].best_rouge1 and table.rows[0].best_rouge2
        assert table.rows[1].name == "CFVi-2"

    def test_empty_published_is_identity(self):
        table = compare([computed_row("a", 50.0, 25.0)], [])
        assert [r.name for r in table.rows] == ["a"]

    def test_tie_breaks_rouge2_then_name(self):
        table = compare(
            [computed_row("bbb", 70.0, 40.0), computed_row("aaa", 70.0, 45.0)],
            [PublishedRow("ccc", 70.0, 45.0)],
        )
        assert [r.name for r in table.rows] == ["aaa", "ccc", "bbb"]

    def test_duplicate_name_rejected(self):
        with pytest.raises(DuplicateName):
            compare(
                [computed_row("same", 1.0, 1.0)],
                [PublishedRow("same", 2.0, 2.0)],
            )

    def test_best_flags_mark_column_maxima(self):
        table = compare(
            [computed_row("low", 10.0, 60.0), computed_row("high", 90.0, 5.0)], []
        )
        by_name = {r.name: r for r in table.rows}
        assert by_name["high"].best_rouge1 and not by_name["high"].best_rouge2
        assert by_name["low"].best_rouge2 and not by_name["low"].best_rouge1

    def test_markdown_render_includes_citation(self):
        table = compare(
            [computed_row("run", 50.0, 25.0)],
            [PublishedRow("KL", 60.2, 40.4, "unsupervised baseline")],
        )
        markdown = render_comparison_md(table)
        assert "| KL | **60.20** | **40.40** | published (unsupervised baseline) |" in markdown
        assert "| run | 50.00 | 25.00 | computed |" in markdown


class TestBaselinesFile:
    def test_bundled_rows_verbatim(self):
        rows = {r.name: r for r in load_baselines(baselines_path())}
        assert rows["KL"].rouge1 == 60.2 and rows["KL"].rouge2 == 40.4
        assert rows["CFVi-2"].rouge1 == 76.38 and rows["CFVi-2"].rouge2 == 49.43
        assert rows["viBERT4news"].rouge1 == 77.44 and rows["viBERT4news"].rouge2 == 52.01

    def test_names_unique_and_cited(self):
        rows = load_baselines(baselines_path())
        names = [r.name for r in rows]
        assert len(names) == len(set(names))
        assert all(r.citation for r in rows)

    def test_merges_with_bundled_baselines(self):
        table = compare([computed_row("mine", 99.0, 99.0)], load_baselines(baselines_path()))
        assert table.rows[0].name == "mine"
        assert len(table.rows) == 17


class TestFormatting:
    def test_half_up_two_decimals(self):
        assert format_pct(77.435) == "77.44"
        assert format_pct(77.434) == "77.43"
        assert format_pct(0.125) == "0.13"
        assert format_pct(100.0) == "100.00"

    def test_report_markdown_contains_table(self, mini_corpus_root):
        corpus = load_corpus(mini_corpus_root)
        report = evaluate(corpus, SummarizerConfig(provider=HASH256))
        markdown = render_report_md(report)
        assert "| Model | ROUGE-1 | ROUGE-2 |" in markdown
        assert f"| {report.provider_name} |" in markdown
        assert "| c01 |" in markdown


class TestFingerprint:
    def test_stable_and_content_sensitive(self, tmp_path):
        root = build_corpus_tree(
            tmp_path,
            {"c01": {"docs": {"d1": "Một.", "d2": "Hai."}, "refs": {"r1": "x", "r2": "y"}}},
        )
        first = corpus_fingerprint(root)
        assert first == corpus_fingerprint(root)
        assert first.startswith("sha256:")
        (root / "c01" / "docs" / "d1.txt").write_text("Khác.", encoding="utf-8")
        assert corpus_fingerprint(root) != first

    def test_dotfiles_do_not_affect_fingerprint(self, tmp_path):
        root = build_corpus_tree(
            tmp_path,
            {"c01": {"docs": {"d1": "Một.", "d2": "Hai."}, "refs": {"r1": "x", "r2": "y"}}},
        )
        before = corpus_fingerprint(root)
        (root / ".DS_Store").write_text("junk", encoding="utf-8")
        (root / "c01" / "docs" / ".hidden").write_text("junk", encoding="utf-8")
        assert corpus_fingerprint(root) == before
