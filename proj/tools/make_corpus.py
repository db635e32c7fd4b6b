#!/usr/bin/env python3
# Copyright 2026 The Ginaz Authors.
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
"""Generates the bundled desk-scale parallel gender corpus (data/corpus.tsv).

Every tuple is instantiated from a sentence template whose gendered slots carry
both masculine and feminine forms, so all four speaker/listener variants are
exact by construction. The script validates the tuple invariants and checks
that no (previous word, word, person, target gender) key maps to two different
alternatives, then writes the block TSV format read by the C++ corpus parser.
"""

import random
import sys
import unicodedata
from collections import defaultdict

FATHA = "َ"
KASRA = "ِ"

NOUNS = [
    ("طبيب", "طبيبة"), ("مهندس", "مهندسة"), ("معلم", "معلمة"),
    ("مدير", "مديرة"), ("موظف", "موظفة"), ("كاتب", "كاتبة"),
    ("لاعب", "لاعبة"), ("طالب", "طالبة"), ("ممرض", "ممرضة"),
    ("مصمم", "مصممة"), ("مترجم", "مترجمة"), ("محاسب", "محاسبة"),
    ("باحث", "باحثة"), ("رسام", "رسامة"), ("مبرمج", "مبرمجة"),
    ("مدرب", "مدربة"), ("طباخ", "طباخة"), ("أستاذ", "أستاذة"),
    ("فنان", "فنانة"), ("مذيع", "مذيعة"), ("ممثل", "ممثلة"),
]

# Nisba nouns are used for the speaker only.
NISBA = [
    ("صيدلي", "صيدلية"), ("مصري", "مصرية"), ("لبناني", "لبنانية"),
    ("مغني", "مغنية"), ("سوري", "سورية"), ("مغربي", "مغربية"),
]

ADJS = [
    ("سعيد", "سعيدة"), ("متعب", "متعبة"), ("مستعد", "مستعدة"),
    ("متأكد", "متأكدة"), ("مشغول", "مشغولة"), ("فخور", "فخورة"),
    ("حزين", "حزينة"), ("غاضب", "غاضبة"), ("قلق", "قلقة"),
    ("مريض", "مريضة"), ("جاهز", "جاهزة"), ("وحيد", "وحيدة"),
    ("جائع", "جائعة"), ("مسرور", "مسرورة"), ("متحمس", "متحمسة"),
    ("ممتن", "ممتنة"), ("خائف", "خائفة"), ("موافق", "موافقة"),
    ("مقتنع", "مقتنعة"), ("آسف", "آسفة"), ("مرتاح", "مرتاحة"),
    ("نشيط", "نشيطة"), ("متفائل", "متفائلة"), ("محظوظ", "محظوظة"),
]

# Second-person imperfect verbs with a fixed object phrase.
VERBS = [
    ("تكتب", "الرسالة"), ("تعمل", "كثيرا"), ("تدرس", "الطب"),
    ("تحب", "القهوة"), ("تريد", "الماء"), ("تعرف", "الطريق"),
    ("تسكن", "هنا"), ("تذهب", "إلى العمل"), ("تلعب", "كرة القدم"),
    ("تشرب", "الشاي"), ("تفهم", "الدرس"), ("تسمع", "الموسيقى"),
    ("تنتظر", "الحافلة"), ("تساعد", "الناس"), ("تتكلم", "العربية"),
    ("تحتاج", "مساعدة"), ("ترسم", "لوحة"), ("تطبخ", "العشاء"),
    ("تكره", "البرد"), ("تفضل", "الشاي"),
]

IMPERATIVES = [
    ("اكتب", "اسمك هنا"), ("اذهب", "إلى البيت"), ("اجلس", "هنا"),
    ("انتظر", "قليلا"), ("ادرس", "جيدا"), ("اسمع", "الكلام"),
    ("اشرب", "الماء"), ("افتح", "الباب"), ("ارسم", "صورة"),
    ("العب", "معنا"), ("اشرح", "الدرس"), ("اترك", "الكتاب"),
]

# Jussive after the prohibitive particle; masculine form + ي.
JUSSIVES = [("تقلق", "تقلقي"), ("تحزن", "تحزني"), ("تتأخر", "تتأخري"),
            ("تغضب", "تغضبي")]

VOCATIVES = [
    ("عزيزي", "عزيزتي"), ("صديقي", "صديقتي"), ("حبيبي", "حبيبتي"),
    ("أخي", "أختي"), ("سيدي", "سيدتي"), ("زميلي", "زميلتي"),
    ("جاري", "جارتي"),
]

DUAL_STEMS = ["صديق", "طبيب", "معلم", "مدير", "زميل", "جار", "مساعد",
              "مدرب"]

NEUTRAL = [
    "الجو جميل اليوم", "ذهبنا إلى السوق صباحا", "هذا الكتاب مفيد",
    "المدينة كبيرة ومزدحمة", "نحن نحب القهوة", "القطار يصل في الثامنة",
    "الطعام لذيذ", "البيت قريب من المدرسة", "اشترينا خبزا وحليبا",
    "السماء صافية", "الاجتماع غدا", "المكتبة مغلقة الآن",
    "الأطفال يلعبون في الحديقة", "الشاي ساخن", "هذه الرواية طويلة",
    "الشارع هادئ في الليل", "وصلت الرسالة أمس", "الامتحان سهل",
    "المطر غزير هذا الشتاء", "السيارة جديدة", "الحديقة واسعة",
    "الفيلم ممتع", "الساعة العاشرة", "نسافر في الصيف",
    "الباب مفتوح", "الدرس الأول سهل", "كم الساعة ؟",
]

KEYS = [("M", "M"), ("M", "F"), ("F", "M"), ("F", "F")]


class Slot:
    """A gendered template position. `persons` is "1", "2" or "12"."""

    def __init__(self, persons, forms):
        self.persons = persons
        self.forms = forms  # dict (speaker, listener) -> surface

    def surface(self, key):
        return self.forms[key]

    def label(self, key):
        s, l = key
        if self.persons == "1":
            return "1" + s
        if self.persons == "2":
            return "2" + l
        return "1" + s + "+2" + l


def speaker(m, f):
    return Slot("1", {k: (m if k[0] == "M" else f) for k in KEYS})


def listener(m, f):
    return Slot("2", {k: (m if k[1] == "M" else f) for k in KEYS})


def dual(stem):
    forms = {
        ("M", "M"): stem + "ك" + FATHA,
        ("M", "F"): stem + "ك" + KASRA,
        ("F", "M"): stem + "تك" + FATHA,
        ("F", "F"): stem + "تك" + KASRA,
    }
    return Slot("12", forms)


def words(text):
    return text.split()


def acc(pair):
    return (pair[0] + "ا", pair[1])


def build_templates(rng):
    """Returns a list of token-lists (str for neutral tokens, Slot otherwise)."""
    out = []

    def pick(seq, n):
        seq = list(seq)
        rng.shuffle(seq)
        return seq[:n]

    for m, f in pick(NOUNS + NISBA, 18):
        out.append(["أنا", speaker(m, f)])
    for m, f in pick(ADJS, 14):
        out.append(["أنا", speaker(m, f), "اليوم"])
    for m, f in pick(ADJS, 14):
        m2, f2 = acc((m, f))
        out.append(["كنت", speaker(m2, f2), "جدا"])
    for m, f in pick(ADJS, 10):
        m2, f2 = acc((m, f))
        out.append(["لست", speaker(m2, f2)])
    for (m1, f1), (m2, f2) in zip(pick(NOUNS, 16), pick(NOUNS, 16)):
        out.append(["أنا", speaker(m1, f1), "وأنت", listener(m2, f2)])
    for m, f in pick(NOUNS, 12):
        out.append(["هل", "أنت", listener(m, f), "؟"])
    for m, f in pick(ADJS, 12):
        out.append(["أنت", listener(m, f), "جدا"])
    for m, f in pick(ADJS, 8):
        out.append(["هل", "أنت", listener(m, f), "؟"])
    for verb, obj in VERBS:
        out.append(["أنت", listener(verb, verb + "ين")] + words(obj))
    for verb, obj in pick(VERBS, 14):
        out.append(["هل", listener(verb, verb + "ين")] + words(obj) + ["؟"])
    for (am, af), (verb, obj) in zip(pick(ADJS, 12), pick(VERBS, 12)):
        out.append(["أنا", speaker(am, af), "لأنك",
                    listener(verb, verb + "ين")] + words(obj))
    for verb, obj in IMPERATIVES:
        out.append([listener(verb, verb + "ي")] + words(obj))
    for verb, obj in pick(IMPERATIVES, 8):
        out.append(["من", "فضلك", listener(verb, verb + "ي")] + words(obj))
    for m, f in JUSSIVES:
        out.append(["لا", listener(m, f)])
        out.append(["لا", listener(m, f), "الآن"])
    for m, f in VOCATIVES:
        out.append(["شكرا", "يا", listener(m, f)])
        out.append(["مرحبا", "يا", listener(m, f)])
    for (vm, vf), (verb, obj) in zip(pick(VOCATIVES, 6), pick(IMPERATIVES, 6)):
        out.append(["يا", listener(vm, vf), "،", listener(verb, verb + "ي")]
                   + words(obj))
    for stem in DUAL_STEMS:
        out.append(["أنا", dual(stem)])
        out.append(["أنا", dual(stem), "دائما"])
    for (am, af), (bm, bf) in zip(pick(ADJS, 12), pick(ADJS, 12)):
        out.append(["أنا", speaker(am, af), "وأنت", listener(bm, bf)])
    for (nm, nf), (lm, lf) in zip(pick(NOUNS, 8), pick(NOUNS, 8)):
        out.append(["أنا", speaker(nm, nf), "،", "هل", "أنت",
                    listener(lm, lf), "أيضا", "؟"])
    for text in NEUTRAL:
        out.append(words(text))
    return out


def instantiate(template, key):
    return [t if isinstance(t, str) else t.surface(key) for t in template]


def labels_for(template, key):
    return ["N" if isinstance(t, str) else t.label(key) for t in template]


def main():
    rng = random.Random(20221118)
    fig1 = ["أنا", speaker("طبيب", "طبيبة"), "وأنت", listener("ممرض", "ممرضة")]
    templates = [fig1] + build_templates(rng)

    # Deduplicate identical templates (same surfaces in every variant).
    seen = set()
    unique = []
    for t in templates:
        sig = tuple(tuple(instantiate(t, k)) for k in KEYS)
        if sig in seen:
            continue
        seen.add(sig)
        unique.append(t)

    blocks = []
    bigram_alt = defaultdict(set)
    for idx, t in enumerate(unique):
        base_key = ("M", "F") if idx == 0 else rng.choice(KEYS)
        base = instantiate(t, base_key)
        labels = labels_for(t, base_key)
        variants = {k: instantiate(t, k) for k in KEYS}
        for k, v in variants.items():
            assert len(v) == len(base)
        for a in KEYS:
            for b in KEYS:
                diff = [p for p in (0, 1) if a[p] != b[p]]
                if len(diff) != 1:
                    continue
                person = diff[0] + 1
                src, dst = variants[a], variants[b]
                for i, slot in enumerate(t):
                    if isinstance(slot, str) or src[i] == dst[i]:
                        continue
                    assert str(person) in slot.persons
                    prev = src[i - 1] if i > 0 else "<s>"
                    bigram_alt[(prev, src[i], person, b[diff[0]])].add(dst[i])
        block = [
            "#id\tt%03d" % idx,
            "B\t" + " ".join(base),
            "L\t" + " ".join(labels),
        ]
        for k in KEYS:
            block.append(k[0] + k[1] + "\t" + " ".join(variants[k]))
        blocks.append("\n".join(block))

    conflicts = {k: v for k, v in bigram_alt.items() if len(v) > 1}
    if conflicts:
        for k, v in conflicts.items():
            print("conflict:", k, v, file=sys.stderr)
        sys.exit(1)

    text = "\n\n".join(blocks) + "\n"
    assert unicodedata.normalize("NFC", text) == text
    out = sys.argv[1] if len(sys.argv) > 1 else "data/corpus.tsv"
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text)
    print("wrote %d tuples to %s" % (len(blocks), out), file=sys.stderr)


if __name__ == "__main__":
    main()
