#!/usr/bin/env python3
# Copyright 2026 The gpaiqa Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/reference-catalog.txt and the fixture assessments.

The reference catalog is illustrative: element structure follows the
public-summary template, per-section metric counts are fixed, prompts and
weights are reconstructed. Fixture verdicts are drawn from a seeded RNG.
Run from the repository root; output is deterministic.
"""

import hashlib
import random
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
CATALOG_NAME = "gpai-public-summary-reference"
CATALOG_VERSION = "1.0"

DIMS = {
    "Cp": "Completeness",
    "Cl": "Clarity",
    "Cs": "Consistency",
    "Cr": "Correctness",
    "Ac": "Accessibility",
    "Co": "Comprehension",
}

PROMPTS = {
    "Completeness": "{} is provided",
    "Clarity": "{} is stated unambiguously",
    "Consistency": "{} follows the template's labels and terminology",
    "Correctness": "{} is accurate and agrees with the provider's other public documentation",
    "Accessibility": "{} is easy to locate and open (working links, accessible format)",
    "Comprehension": "{} is understandable to a non-specialist reader",
}

# (section, element_id, label, metrics, options)
# metrics: list of dimension codes; "Cp2" means weight 2; "Cp:<label>" overrides the label.
# options: gate=<element> (dependent of that element's first metric),
#          gate_element (this element's first metric is a gate), optional.
E = []


def el(section, element, label, metrics, **opts):
    E.append((section, element, label, metrics, opts))


D = "Document"
el(D, "D.a", "A title identifying the document as the public summary", ["Cp", "Cl", "Cr"])
el(D, "D.b", "The publication date or version of the summary", ["Cp", "Cr", "Cs"])
el(D, "D.c", "The template's section numbering", ["Cs", "Cp", "Cl"])
el(D, "D.d", "The template's field labels", ["Cs", "Cl"])
el(D, "D.e", "Publication of the summary alongside the model", ["Ac", "Cp", "Cr"])
el(D, "D.f", "A link from the model card or repository to the summary", ["Ac", "Co"])
el(D, "D.g", "A static, readable format for the summary", ["Ac", "Cl"])
el(D, "D.h", "The language of the summary", ["Co", "Ac"])
el(D, "D.i", "Explicit yes/no answers where the template asks for them", ["Cl", "Cp", "Cs"])
el(D, "D.j", "Every field filled in without placeholders", ["Cp", "Cr"])
el(D, "D.k", "The reference to the transparency obligation the summary fulfils", ["Cr", "Cl"])
el(D, "D.l", "Explanation of technical terms", ["Co", "Cl"])
el(D, "D.m", "Access to earlier versions or a change log", ["Ac"])

G = "GeneralInformation"
el(G, "1.1.a", "Provider name and contact",
   ["Cp2:The provider name", "Cp:The provider contact address", "Cl", "Cr", "Ac:The provider contact address"])
el(G, "1.1.b", "Authorised representative name and contact",
   ["Cp:The authorised representative name", "Cp:The authorised representative contact", "Cl", "Cr"],
   optional=True)
el(G, "1.1.c", "The provider's legal or compliance page", ["Ac", "Cp", "Cr", "Co"])
el(G, "1.2.a", "The versioned model name(s)", ["Cp2", "Cl", "Cs", "Cr"])
el(G, "1.2.b", "Model dependencies for modified or fine-tuned models", ["Cp", "Cl", "Cr", "Co"])
el(G, "1.2.c", "The date of placement on the market", ["Cp", "Cr", "Cl"])
el(G, "1.2.d", "The model family or variants the summary covers", ["Cp", "Cl", "Cs", "Cr"])
el(G, "1.3.a", "The training data modalities", ["Cp2", "Cl", "Cs", "Cr"])
el(G, "1.3.b", "The training data size per modality", ["Cp2", "Cl", "Cr", "Co"])
el(G, "1.3.c", "The types of content per modality", ["Cp", "Cl", "Cr", "Co"])
el(G, "1.3.d", "The latest date of data collection", ["Cp", "Cl", "Cr"])
el(G, "1.3.e", "The start of the data collection period", ["Cp", "Cr"])
el(G, "1.3.f", "The linguistic characteristics of the training data", ["Cp", "Cl", "Cr", "Co"])
el(G, "1.3.g", "Other overall characteristics of the training data", ["Cp", "Cl", "Co"], optional=True)
el(G, "1.3.h", "Additional comments on the training data size", ["Cp", "Cl"], optional=True)

P = "PublicDataSources"
el(P, "2.1.a", "Whether publicly available datasets were used", ["Cp2"], gate_element=True)
el(P, "2.1.b", "The modality of the public datasets", ["Cp", "Cl", "Cr"], gate="2.1.a")
el(P, "2.1.c", "The list of large public datasets", ["Cp2", "Cl", "Cs", "Cr2", "Ac", "Co"], gate="2.1.a")
el(P, "2.1.d", "Links to each listed public dataset", ["Ac", "Cp", "Cr"], gate="2.1.a")
el(P, "2.1.e", "The general description of other public datasets", ["Cp2", "Cl", "Cr", "Co"], gate="2.1.a")
el(P, "2.1.f", "The share of public data in the training data", ["Cp", "Cl", "Cr"], gate="2.1.a")
el(P, "2.1.g", "The licences of the listed public datasets", ["Cp", "Cr", "Co"], gate="2.1.a", optional=True)
el(P, "2.1.h", "The public dataset modalities as declared in the general information section", ["Cs", "Cr", "Cl"], gate="2.1.a")

V = "PrivateDataSources"
el(V, "2.2.1.a", "Whether datasets commercially licensed from rightsholders were used", ["Cp2"], gate_element=True)
el(V, "2.2.1.b", "The modality of the licensed datasets", ["Cp", "Cl", "Cr"], gate="2.2.1.a")
el(V, "2.2.1.c", "The description of the licensed datasets", ["Cp2", "Cl", "Cr", "Co"], gate="2.2.1.a")
el(V, "2.2.1.d", "The categories of licensors", ["Cp", "Cr"], gate="2.2.1.a", optional=True)
el(V, "2.2.1.e", "The licensed dataset modalities as declared in the general information section", ["Cs"], gate="2.2.1.a")
el(V, "2.2.2.a", "Whether other private datasets from third parties were used", ["Cp2"], gate_element=True)
el(V, "2.2.2.b", "The modality of the other private datasets", ["Cp", "Cl", "Cr"], gate="2.2.2.a")
el(V, "2.2.2.c", "The list of publicly known private datasets", ["Cp2", "Cl", "Cr", "Ac"], gate="2.2.2.a")
el(V, "2.2.2.d", "The general description of other private datasets", ["Cp2", "Cl", "Cr", "Co"], gate="2.2.2.a")
el(V, "2.2.2.e", "How the other private datasets were obtained", ["Cp", "Cr", "Cl"], gate="2.2.2.a")
el(V, "2.2.2.f", "The private dataset modalities as declared in the general information section", ["Cs"], gate="2.2.2.a")

S = "ScrapedCrawledData"
el(S, "2.3.a", "Whether data crawled or scraped from online sources was used", ["Cp2"], gate_element=True)
el(S, "2.3.b", "The crawler names or identifiers", ["Cp2", "Cl", "Cr", "Ac"], gate="2.3.a")
el(S, "2.3.c", "The purposes of the crawlers", ["Cp", "Cl", "Cr"], gate="2.3.a")
el(S, "2.3.d", "Crawler behaviour towards robots.txt", ["Cp2", "Cl", "Cr"], gate="2.3.a")
el(S, "2.3.e", "Crawler behaviour towards paywalled or login-protected content", ["Cp", "Cl", "Cr"], gate="2.3.a")
el(S, "2.3.f", "Crawler behaviour towards CAPTCHAs and other access controls", ["Cp", "Cl", "Cr"], gate="2.3.a")
el(S, "2.3.g", "The period of data collection", ["Cp2", "Cl", "Cr", "Cs"], gate="2.3.a")
el(S, "2.3.h", "The description of the types of content collected", ["Cp2", "Cl", "Cr", "Co"], gate="2.3.a")
el(S, "2.3.i", "The description of the online sources crawled", ["Cp2", "Cl", "Cr", "Co"], gate="2.3.a")
el(S, "2.3.j", "The list of most relevant domain names", ["Cp2", "Cl", "Cs", "Cr", "Ac", "Co"], gate="2.3.a")
el(S, "2.3.k", "The share of content covered by the domain list", ["Cp", "Cr", "Cl"], gate="2.3.a")
el(S, "2.3.l", "Third-party crawled corpora that were reused", ["Cp", "Cl", "Cr"], gate="2.3.a")
el(S, "2.3.m", "Additional information on crawling", ["Cp", "Cl", "Co"], gate="2.3.a", optional=True)
el(S, "2.3.n", "Crawling information as declared in the general information and data processing sections", ["Cs", "Cr"], gate="2.3.a")

U = "UserData"
el(U, "2.4.a", "Whether data from user interactions with the model was used", ["Cp2"], gate_element=True)
el(U, "2.4.b", "Whether data from the provider's other services or products was used", ["Cp2"], gate_element=True)
el(U, "2.4.c", "The description of the services or products", ["Cp2", "Cl", "Cr", "Co"], gate="2.4.b")
el(U, "2.4.d", "The modality of the user interaction data", ["Cp", "Cl", "Cr"], gate="2.4.a")
el(U, "2.4.e", "The modality of the services or products data", ["Cp", "Cr"], gate="2.4.b")
el(U, "2.4.f", "User data answers as declared in the general information section", ["Cs", "Cr"])
el(U, "2.4.g", "A pointer to the applicable privacy information", ["Cp"], optional=True)

Y = "SyntheticOtherData"
el(Y, "2.5.a", "Whether synthetic data was used", ["Cp2"], gate_element=True)
el(Y, "2.5.b", "The modality of the synthetic data", ["Cp", "Cl", "Cr"], gate="2.5.a")
el(Y, "2.5.c", "The description of the models used to generate synthetic data", ["Cp2", "Cl", "Cr", "Co"], gate="2.5.a")
el(Y, "2.5.d", "The names of generator models available on the market", ["Cp2", "Cl", "Cr", "Ac"], gate="2.5.a")
el(Y, "2.5.e", "The share of synthetic data in the training data", ["Cp", "Cr", "Cl"], gate="2.5.a")
el(Y, "2.5.f", "Synthetic data answers as declared in the general information section", ["Cs"])
el(Y, "2.6.a", "Whether other sources of data were used", ["Cp2"], gate_element=True)
el(Y, "2.6.b", "The description of the other data sources", ["Cp2", "Cl", "Cr", "Co"], gate="2.6.a")
el(Y, "2.6.c", "The modality of the other data sources", ["Cp", "Cl", "Cr"], gate="2.6.a")
el(Y, "2.6.d", "How the other data was obtained", ["Cp", "Cr"], gate="2.6.a")
el(Y, "2.6.e", "Other data answers as declared in the general information section", ["Cs", "Cr"])

R = "DataProcessing"
el(R, "3.1.a", "Measures to honour text and data mining opt-outs", ["Cp2", "Cl", "Cr", "Co"])
el(R, "3.1.b", "The opt-out protocols that are honoured", ["Cp2", "Cl", "Cr"])
el(R, "3.1.c", "The copyright policy or code of practice commitment", ["Cp", "Ac", "Cr"])
el(R, "3.2.a", "Measures to remove illegal content", ["Cp2", "Cl", "Cr", "Co"])
el(R, "3.3.a", "Other information on data processing", ["Cp", "Cl"], optional=True)
el(R, "3.3.b", "Data processing terminology", ["Cs"])

EXPECTED = {
    "Document": 30, "GeneralInformation": 54, "PublicDataSources": 26, "PrivateDataSources": 27,
    "ScrapedCrawledData": 46, "UserData": 14, "SyntheticOtherData": 28, "DataProcessing": 17,
}


def build_catalog():
    metrics = []
    first_id = {}
    for section, element, label, specs, opts in E:
        for n, spec in enumerate(specs, start=1):
            code, _, override = spec.partition(":")
            weight = "2" if code.endswith("2") else "1"
            dim = DIMS[code.rstrip("2")]
            mid = f"F{element}.{n}"
            if n == 1:
                first_id[element] = mid
            prompt = PROMPTS[dim].format(override or label)
            if opts.get("gate_element") and n == 1:
                prompt = f"{label} is answered (yes/no)"
            gate = opts.get("gate")
            applicability = f"if {first_id[gate]} == yes" if gate else "always"
            metrics.append(dict(id=mid, element_id=element, section=section, dimension=dim,
                                weight=weight, prompt=prompt,
                                optional_field="true" if opts.get("optional") else "false",
                                applicability=applicability,
                                gate_element=bool(opts.get("gate_element")) and n == 1))
    counts = {}
    for m in metrics:
        counts[m["section"]] = counts.get(m["section"], 0) + 1
    assert counts == EXPECTED, counts
    return metrics


def write_catalog(metrics):
    out = [f"name = {CATALOG_NAME}", f"version = {CATALOG_VERSION}"]
    for m in metrics:
        out.append("")
        out.append("[metric]")
        for key in ("id", "element_id", "section", "dimension", "weight", "prompt",
                    "optional_field", "applicability"):
            out.append(f"{key} = {m[key]}")
    (ROOT / "data" / "reference-catalog.txt").write_text("\n".join(out) + "\n", encoding="utf-8")


# Fixture summaries: (slug, provider, model, form, date, gate answers, per-section quality, seed)
FIXTURES = [
    ("smollm3-3b", "Hugging Face", "SmolLM3-3B", "WebPage", "2025-10-02",
     {"2.1.a": "yes", "2.2.1.a": "no", "2.2.2.a": "no", "2.3.a": "yes", "2.4.a": "no",
      "2.4.b": "no", "2.5.a": "yes", "2.6.a": "no"},
     {"Document": 0.62, "GeneralInformation": 0.72, "PublicDataSources": 0.95,
      "PrivateDataSources": 1.0, "ScrapedCrawledData": 1.0, "UserData": 1.0,
      "SyntheticOtherData": 0.55, "DataProcessing": 0.9}, 11),
    ("apertus", "Swiss AI Initiative", "Apertus", "PDF", "2025-09-15",
     {"2.1.a": "yes", "2.2.1.a": "no", "2.2.2.a": "no", "2.3.a": "yes", "2.4.a": "no",
      "2.4.b": "no", "2.5.a": "no", "2.6.a": "no"},
     {"Document": 0.85, "GeneralInformation": 0.75, "PublicDataSources": 1.0,
      "PrivateDataSources": 1.0, "ScrapedCrawledData": 1.0, "UserData": 1.0,
      "SyntheticOtherData": 1.0, "DataProcessing": 1.0}, 23),
    ("bielik-v3-11b-instruct", "SpeakLeash", "Bielik v3 11B Instruct", "PDF", "2025-11-20",
     {"2.1.a": "yes", "2.2.1.a": "no", "2.2.2.a": "no", "2.3.a": "yes", "2.4.a": "no",
      "2.4.b": "no", "2.5.a": "yes", "2.6.a": "no"},
     {"Document": 0.87, "GeneralInformation": 0.86, "PublicDataSources": 0.85,
      "PrivateDataSources": 1.0, "ScrapedCrawledData": 0.8, "UserData": 1.0,
      "SyntheticOtherData": 1.0, "DataProcessing": 0.92}, 37),
    ("phi-4", "Microsoft", "Phi-4", "MarkdownFile", "2025-12-05",
     {"2.1.a": "yes", "2.2.1.a": "yes", "2.2.2.a": "no", "2.3.a": "yes", "2.4.a": "yes",
      "2.4.b": "no", "2.5.a": "yes", "2.6.a": "no"},
     {"Document": 0.85, "GeneralInformation": 0.65, "PublicDataSources": 0.04,
      "PrivateDataSources": 0.5, "ScrapedCrawledData": 0.0, "UserData": 0.0,
      "SyntheticOtherData": 0.08, "DataProcessing": 0.4}, 41),
    ("bria-3.2", "Bria AI", "Bria 3.2", "PDF", "2026-01-12",
     {"2.1.a": "no", "2.2.1.a": "yes", "2.2.2.a": "no", "2.3.a": "no", "2.4.a": "no",
      "2.4.b": "no", "2.5.a": "no", "2.6.a": "no"},
     {"Document": 0.68, "GeneralInformation": 0.7, "PublicDataSources": 1.0,
      "PrivateDataSources": 1.0, "ScrapedCrawledData": 1.0, "UserData": 1.0,
      "SyntheticOtherData": 1.0, "DataProcessing": 1.0}, 53),
]

SOURCE_URLS = {
    "smollm3-3b": "https://huggingface.co/HuggingFaceTB/SmolLM3-3B",
    "apertus": "https://huggingface.co/swiss-ai",
    "bielik-v3-11b-instruct": "https://huggingface.co/speakleash",
    "phi-4": "https://huggingface.co/microsoft/phi-4",
    "bria-3.2": "https://huggingface.co/briaai",
}


def pick(rng, quality):
    r = rng.random()
    if r < quality:
        return "Sufficient"
    if r < quality + (1 - quality) / 2:
        return "PartiallySufficient"
    return "Insufficient"


def write_fixtures(metrics):
    by_id = {m["id"]: m for m in metrics}
    gate_of_element = {m["element_id"]: m["id"] for m in metrics if m["gate_element"]}
    fixtures = ROOT / "data" / "fixtures"
    (fixtures / "assessments").mkdir(parents=True, exist_ok=True)
    (fixtures / "sources").mkdir(parents=True, exist_ok=True)
    for slug, provider, model, form, date, gates, quality, seed in FIXTURES:
        source = (f"# {model}: archived copy placeholder\n\n"
                  f"Fixture stand-in for the {provider} public summary of training content.\n"
                  f"It is not the provider's document.\n")
        source_path = fixtures / "sources" / f"{slug}.md"
        source_path.write_text(source, encoding="utf-8")
        digest = "sha256:" + hashlib.sha256(source.encode("utf-8")).hexdigest()

        answers = {gate_of_element[e]: a for e, a in gates.items()}
        rng = random.Random(seed)

        def applicable(m):
            rule = m["applicability"]
            if rule == "always":
                return True
            gid = rule.split()[1]
            return applicable(by_id[gid]) and answers[gid] == rule.split()[-1]

        rows = []
        for m in metrics:
            # Draw for every metric so the stream does not depend on gates.
            verdict = pick(rng, quality[m["section"]])
            if not applicable(m):
                continue
            note = ""
            if m["id"] in answers:
                verdict = "Sufficient"
                note = f"gate={answers[m['id']]}"
            rows.append((m["id"], verdict, note))
        rows.sort()
        lines = [
            f"provider: {provider}",
            f"model: {model}",
            f"summary_title: Public summary of training content for {model}",
            f"source_url: {SOURCE_URLS[slug]}",
            f"published_form: {form}",
            f"assessed_version_date: {date}",
            f"archived_copy_digest: {digest}",
            f"catalog_ref: {CATALOG_NAME}@{CATALOG_VERSION}",
            "evaluator: Evaluator A",
            "verifier: Evaluator B",
            "",
            "metric_id\tverdict\tnote",
        ]
        for mid, verdict, note in rows:
            lines.append(f"{mid}\t{verdict}\t{note}" if note else f"{mid}\t{verdict}")
        (fixtures / "assessments" / f"{slug}.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")


if __name__ == "__main__":
    metrics = build_catalog()
    write_catalog(metrics)
    write_fixtures(metrics)
    print(f"{len(metrics)} metrics; {len(FIXTURES)} fixture assessments")
