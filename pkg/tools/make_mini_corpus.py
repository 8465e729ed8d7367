#!/usr/bin/env python3
"""Generate the bundled synthetic mini corpus (deterministic, seed 20240501).

Composes short testimony-like documents from template sentences so the full
pipeline has realistic-looking input: role-specific vocabulary, region
mentions, years and punctuation for the normalizer, and a skewed valence
balance (positive words frequent but mild, negative words rarer but intense).

The output is committed at src/redlex/data/mini_corpus.jsonl; rerun only if
the templates change, then regenerate the golden report.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "redlex" / "data" / "mini_corpus.jsonl"

RANKS = ["comandante", "coronel", "sargento", "teniente", "capitán"]
UNITS = ["batallón", "pelotón", "gaula", "ejército"]
UNITS2 = ["brigada", "división", "unidad"]
PLACES = ["vereda", "montaña", "frontera", "quebrada", "finca", "carretera", "río"]
VICTIM_WORDS = ["muchacho", "joven", "campesino", "niño"]
VICTIM_ADJS = ["humilde", "inocente", "trabajador"]
ENEMY_WORDS = ["guerrillero", "miliciano"]
KIN = ["hijo", "hermano", "esposo", "sobrino", "padre"]
OP_NAMES = ["relámpago", "escudo", "trueno"]
VEHICLES = ["camión", "vehículo"]
GOOD_WORDS = ["esperanza", "paz", "dignidad", "solidaridad", "reconciliación"]

APPEARER_SENTENCES = [
    "Yo era el {rank} del {unit} y recibí la orden de presentar resultados.",
    "La presión por las bajas venía del {rank} de la {unit2}.",
    "Los soldados llevaron al {victim} hasta la {place} en la madrugada.",
    "Presentamos al {victim} como {enemy} muerto en combate.",
    "El informe del enfrentamiento era falso y lo firmamos todos.",
    "Recibimos recompensas y permisos por cada baja reportada.",
    "Reconozco mi responsabilidad en los hechos y pido perdón a las familias.",
    "Sé que el engaño causó dolor y daño profundo a la comunidad.",
    "La operación {op} quedó registrada en los documentos de la {unit2}.",
    "El {rank} ordenó simular un combate en la {place}.",
    "Le pusieron un arma y un uniforme al cuerpo del {victim}.",
    "Engañaron al {victim} con una promesa de empleo y un traslado.",
    "Hoy hablo ante el tribunal para decir la verdad completa.",
    "Agradezco la oportunidad de reconocer los crímenes ante las víctimas.",
    "La patrulla salió del {unit} con la misión de mostrar resultados.",
    "El miedo y el silencio cubrieron la zona durante años.",
    "Quiero aportar a la paz y a la reparación de las familias.",
    "Recuerdo la noche de la operación y recuerdo la orden del {rank}.",
    "El {unit} reportó una baja en combate que nunca ocurrió.",
    "Asumo la responsabilidad por el asesinato del {victim}.",
    "Actuamos con crueldad y dejamos a las familias en el abandono.",
    "Ofrezco respeto a las víctimas y pido que no haya olvido.",
    "Subieron el cuerpo a un {vehicle} y lo enterraron lejos de la {place}.",
    "Mentimos en el expediente y negamos los hechos ante la fiscalía.",
    "Admito que obedecí la orden aunque sabía que era un crimen.",
    "El testimonio de los testigos me ayuda a decir la verdad.",
    "Valoro este proceso y espero la reconciliación con el pueblo.",
    "Hablo con respeto y con la esperanza de sanar a la comunidad.",
    "Cada audiencia es una oportunidad de verdad y de reconocimiento.",
    "Prometieron un empleo en la {place} y era una mentira.",
    "La {unit2} escuchaba la radio y esperaba el reporte de bajas.",
    "Pido perdón con humildad y ofrezco mi apoyo a la búsqueda.",
]

VICTIM_SENTENCES = [
    "Mi {kin} era un {victim} {vadj} que buscaba empleo.",
    "Se lo llevaron con una promesa de trabajo hacia la {place}.",
    "Lo presentaron como {enemy} muerto en combate y era mentira.",
    "Encontramos su cuerpo en una fosa después de años de búsqueda.",
    "Exigimos verdad y justicia para todas las víctimas.",
    "El dolor de la familia no termina pero guardamos esperanza.",
    "La muerte de mi {kin} destruyó la vida de la familia.",
    "Pido que se reconozca la dignidad y la memoria de mi {kin}.",
    "Agradezco al tribunal por escuchar la voz de las víctimas.",
    "Queremos paz y reparación para la comunidad.",
    "El {rank} del {unit} sabía la verdad y la ocultó.",
    "La justicia llega tarde pero llega con la verdad.",
    "Mi {kin} no era {enemy} y lo mataron sin razón.",
    "La esperanza nos mantiene en la búsqueda de la verdad.",
    "Sufrimos amenazas y miedo cuando denunciamos los hechos.",
    "Reconocer la verdad es el primer paso de la reparación.",
    "La comunidad acompaña a las familias con amor y solidaridad.",
    "Su recuerdo vive en la memoria del pueblo.",
    "El perdón es posible si hay verdad y reconocimiento.",
    "Lloramos a los jóvenes que la guerra nos quitó.",
    "El apoyo y el respeto del pueblo nos dan fortaleza.",
    "La impunidad y el olvido son otra forma de injusticia.",
    "Mi {kin} estudiaba y ayudaba en la {place} con la cosecha.",
    "Soñaba con un futuro de trabajo y de vida para sus {kin2}.",
    "La madre cuidaba a los {kin2} y esperaba su regreso cada noche.",
    "Un {vehicle} del {unit} se lo llevó por la carretera.",
    "Creímos la promesa y la mentira nos quitó la vida entera.",
    "Hoy la escuela y la iglesia del pueblo guardan su memoria.",
    "Abrazamos a las familias y caminamos con esperanza hacia la paz.",
    "El proceso nos ayuda a sanar y a perdonar con dignidad.",
    "La tierra y la cosecha esperan el regreso de la paz.",
    "Pedimos respeto y apoyo para la búsqueda de los desaparecidos.",
]

SHARED_SENTENCES = [
    "Los hechos ocurrieron en el año {year}, cerca del municipio.",
    "La región de {region} vivió años de violencia y guerra.",
    "Las familias de {region} siguen en la búsqueda de la verdad.",
    "La audiencia del caso quedó registrada en los documentos del tribunal.",
    "El testimonio ante la fiscalía duró casi {hours} horas.",
    "La comunidad de la {place} acompaña el proceso con {good}.",
]

REGION_WORDS = {
    "Antioquia": "antioquia",
    "Casanare": "casanare",
    "Costa Caribe": "caribe",
    "Huila": "huila",
    "Meta": "meta",
    "Norte de Santander": "santander",
}

# (subcase, role, how many documents)
PLAN = [
    ("Huila", "compareciente", 9),
    ("Huila", "victima", 4),
    ("Huila", None, 1),
    ("Casanare", "compareciente", 6),
    ("Casanare", "victima", 3),
    ("Casanare", None, 1),
    ("Costa Caribe", "compareciente", 4),
    ("Costa Caribe", "victima", 4),
    ("Antioquia", "compareciente", 2),
    ("Antioquia", "victima", 4),
    ("Meta", "victima", 3),
    ("Meta", None, 1),
    ("Norte de Santander", "compareciente", 1),
    ("Norte de Santander", None, 3),
    (None, "compareciente", 2),
    (None, "victima", 1),
    (None, None, 1),
]


def fill(template: str, rng: random.Random, region: str | None) -> str:
    return template.format(
        rank=rng.choice(RANKS),
        unit=rng.choice(UNITS),
        unit2=rng.choice(UNITS2),
        place=rng.choice(PLACES),
        victim=rng.choice(VICTIM_WORDS),
        vadj=rng.choice(VICTIM_ADJS),
        enemy=rng.choice(ENEMY_WORDS),
        kin=rng.choice(KIN),
        kin2=rng.choice(["hermanos", "hijos"]),
        op=rng.choice(OP_NAMES),
        vehicle=rng.choice(VEHICLES),
        good=rng.choice(GOOD_WORDS),
        year=rng.randint(2002, 2008),
        hours=rng.randint(2, 9),
        region=REGION_WORDS.get(region or "", "caribe"),
    )


def make_text(rng: random.Random, role: str | None, region: str | None) -> str:
    if role == "compareciente":
        pool = APPEARER_SENTENCES
    elif role == "victima":
        pool = VICTIM_SENTENCES
    else:
        pool = APPEARER_SENTENCES + VICTIM_SENTENCES
    n = rng.randint(12, 20)
    sentences = [fill(t, rng, region) for t in rng.sample(pool, min(n, len(pool)))]
    for _ in range(rng.randint(1, 3)):
        sentences.insert(
            rng.randrange(len(sentences)), fill(rng.choice(SHARED_SENTENCES), rng, region)
        )
    return " ".join(sentences)


def main() -> None:
    rng = random.Random(20240501)
    records = []
    counter = 0
    for subcase, role, howmany in PLAN:
        for _ in range(howmany):
            counter += 1
            doc_id = f"video-{counter:03d}"
            records.append(
                {
                    "id": doc_id,
                    "title": f"Audiencia {counter:03d}"
                    + (f" — {subcase}" if subcase else ""),
                    "subcase": subcase,
                    "role": role,
                    "text": make_text(rng, role, subcase),
                }
            )
    # one empty-text document, kept to exercise the skip flag
    counter += 1
    records.append(
        {
            "id": f"video-{counter:03d}",
            "title": f"Audiencia {counter:03d} — sin subtítulos",
            "subcase": "Huila",
            "role": "compareciente",
            "text": "",
        }
    )
    OUT.parent.mkdir(parents=True, exist_ok=True)
    with OUT.open("w", encoding="utf-8", newline="\n") as fh:
        for record in records:
            fh.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")
    print(f"wrote {len(records)} documents -> {OUT}")


if __name__ == "__main__":
    main()
