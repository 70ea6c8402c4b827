#!/usr/bin/env python3
"""Regenerate the bundled mini_corpus fixture (NFC text, LF endings).

The manifest is maintained by hand in this script; tests cross-check it
against the files with an independent line counter.
"""

from __future__ import annotations

import json
import shutil
import unicodedata
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1] / "src" / "vedsum" / "data" / "mini_corpus"

# cluster -> doc_id -> list of sentences; "sents" marks docs that also ship a
# pre-segmented .sents file (others exercise the fallback splitter).
DOCS = {
    "c01": {
        "d1": (
            [
                "Mưa lớn kéo dài ba ngày đã gây ngập lụt nghiêm trọng tại nhiều tỉnh miền Trung.",
                "Hàng nghìn hộ dân phải sơ tán đến nơi an toàn trong đêm.",
                "Chính quyền địa phương đã huy động lực lượng cứu hộ đến các khu vực bị cô lập.",
                "Theo dự báo, mưa sẽ còn tiếp tục trong hai ngày tới.",
            ],
            True,
        ),
        "d2": (
            [
                "Quốc lộ 1A đoạn qua Quảng Nam bị ngập sâu hơn một mét.",
                "Nhiều chuyến tàu Bắc Nam phải dừng hoạt động do đường sắt hư hỏng.",
                "Ngành điện lực đã cắt điện tại các vùng trũng để bảo đảm an toàn.",
            ],
            True,
        ),
        "d3": (
            [
                'Ông Nguyễn Văn Hòa cho biết: "Nước lên rất nhanh trong đêm."',
                "Gia đình ông đã kịp di chuyển đàn gia súc lên vùng cao.",
                "Thiệt hại ban đầu ước tính hàng chục tỷ đồng.",
            ],
            False,
        ),
    },
    "c02": {
        "d1": (
            [
                "Đội tuyển Việt Nam đã giành chiến thắng 2-0 trước đối thủ trong trận đấu tối qua.",
                "Hai bàn thắng được ghi ở hiệp hai chỉ trong vòng năm phút.",
                "Thủ môn Văn Lâm có ba pha cứu thua xuất sắc.",
                "Hơn bốn vạn khán giả đã đến sân Mỹ Đình cổ vũ.",
                "Với kết quả này, đội tuyển vươn lên dẫn đầu bảng xếp hạng.",
            ],
            False,
        ),
        "d2": (
            [
                "Huấn luyện viên trưởng đánh giá cao tinh thần thi đấu của toàn đội.",
                "Ông cho rằng hàng phòng ngự đã chơi tập trung suốt chín mươi phút.",
                "Trận tiếp theo sẽ diễn ra trên sân khách vào cuối tuần.",
                "Ban huấn luyện dự kiến giữ nguyên đội hình xuất phát.",
            ],
            False,
        ),
    },
    "c03": {
        "d1": (
            [
                "Giá gạo xuất khẩu của Việt Nam tăng lên mức cao nhất trong hai năm qua.",
                "Nhu cầu từ các thị trường châu Á tăng mạnh sau đợt hạn hán kéo dài.",
                "Các doanh nghiệp đã ký hợp đồng xuất khẩu hơn một triệu tấn gạo.",
            ],
            False,
        ),
        "d2": (
            [
                "Bộ Công Thương dự báo kim ngạch xuất khẩu gạo năm nay sẽ vượt bốn tỷ đô la Mỹ.",
                "Nông dân đồng bằng sông Cửu Long phấn khởi vì giá lúa tại ruộng tăng cao.",
                "Tuy nhiên, chuyên gia cảnh báo cần bảo đảm an ninh lương thực trong nước.",
                "Dự trữ quốc gia vẫn được duy trì ở mức an toàn.",
            ],
            True,
        ),
        "d3": (
            [
                "Nhiều nước nhập khẩu đã tăng lượng đặt hàng gạo thơm chất lượng cao.",
                "Thương hiệu gạo Việt ngày càng được ưa chuộng tại thị trường châu Âu.",
            ],
            False,
        ),
    },
}

REFS = {
    "c01": {
        "r1": "Mưa lớn ba ngày gây ngập lụt nghiêm trọng ở miền Trung, hàng nghìn hộ dân sơ tán. "
        "Quốc lộ 1A ngập sâu, tàu Bắc Nam dừng chạy, thiệt hại ước tính hàng chục tỷ đồng.",
        "r2": "Ngập lụt tại miền Trung khiến hàng nghìn hộ dân phải sơ tán trong đêm. "
        "Giao thông đường bộ và đường sắt tê liệt, lực lượng cứu hộ được huy động đến các khu vực bị cô lập.",
    },
    "c02": {
        "r1": "Đội tuyển Việt Nam thắng 2-0 với hai bàn ở hiệp hai và vươn lên dẫn đầu bảng. "
        "Huấn luyện viên khen ngợi tinh thần toàn đội trước trận sân khách cuối tuần.",
        "r2": "Chiến thắng 2-0 tối qua giúp đội tuyển Việt Nam dẫn đầu bảng xếp hạng. "
        "Thủ môn Văn Lâm cứu thua xuất sắc, hàng phòng ngự chơi tập trung suốt trận.",
    },
    "c03": {
        "r1": "Giá gạo xuất khẩu Việt Nam đạt mức cao nhất hai năm nhờ nhu cầu châu Á tăng mạnh. "
        "Kim ngạch dự báo vượt bốn tỷ đô la, nông dân phấn khởi vì giá lúa tăng.",
        "r2": "Xuất khẩu gạo Việt Nam khởi sắc với hợp đồng hơn một triệu tấn và giá cao kỷ lục hai năm. "
        "Chuyên gia lưu ý vẫn phải bảo đảm an ninh lương thực và dự trữ trong nước.",
    },
}

MANIFEST = {
    "clusters": 3,
    "documents": 8,
    "sentences": 28,
    "references": 6,
    "per_cluster": {
        "c01": {"documents": 3, "references": 2, "sentences": {"d1": 4, "d2": 3, "d3": 3}},
        "c02": {"documents": 2, "references": 2, "sentences": {"d1": 5, "d2": 4}},
        "c03": {"documents": 3, "references": 2, "sentences": {"d1": 3, "d2": 4, "d3": 2}},
    },
}


def nfc(text: str) -> str:
    return unicodedata.normalize("NFC", text)


def main() -> None:
    if ROOT.exists():
        shutil.rmtree(ROOT)
    for cluster_id, docs in DOCS.items():
        docs_dir = ROOT / cluster_id / "docs"
        sents_dir = ROOT / cluster_id / "sents"
        refs_dir = ROOT / cluster_id / "refs"
        docs_dir.mkdir(parents=True)
        refs_dir.mkdir(parents=True)
        for doc_id, (sentences, with_sents) in docs.items():
            sentences = [nfc(s) for s in sentences]
            (docs_dir / f"{doc_id}.txt").write_text(
                " ".join(sentences) + "\n", encoding="utf-8", newline="\n"
            )
            if with_sents:
                sents_dir.mkdir(exist_ok=True)
                (sents_dir / f"{doc_id}.sents").write_text(
                    "".join(s + "\n" for s in sentences), encoding="utf-8", newline="\n"
                )
        for ref_id, text in REFS[cluster_id].items():
            (refs_dir / f"{ref_id}.txt").write_text(
                nfc(text) + "\n", encoding="utf-8", newline="\n"
            )
    (ROOT / "manifest.json").write_text(
        json.dumps(MANIFEST, ensure_ascii=False, indent=2) + "\n",
        encoding="utf-8",
        newline="\n",
    )
    print(f"wrote fixture to {ROOT}")


if __name__ == "__main__":
    main()
