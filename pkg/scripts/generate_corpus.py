#!/usr/bin/env python3
"""Regenerates the bundled desk-scale corpus (8 CSV data sources + metadata,
plus the 1,000-record visualization-metadata corpus).

Deterministic: fixed seed, stable ordering. The committed files under
src/hybridsearch/data/ are the outputs of this script; rerun it only when
changing the corpus design.
"""

from __future__ import annotations

import csv
import json
import random
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
DATA = ROOT / "src" / "hybridsearch" / "data"
SOURCES = DATA / "sources"

rng = random.Random(42)


def write_csv(name: str, header: list[str], rows: list[list]) -> None:
    path = SOURCES / f"{name}.csv"
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)
    print(f"wrote {path} ({len(rows)} rows)")


def write_meta(name: str, meta: dict) -> None:
    path = SOURCES / f"{name}.json"
    path.write_text(json.dumps(meta, indent=2) + "\n")
    print(f"wrote {path}")


# ---------------------------------------------------------------------------
# 1. sales: the four-region sample whose aggregates are pinned by tests.

def gen_sales() -> None:
    rows = [["Central", 220], ["East", 225], ["West", 235], ["South", 240]]
    write_csv("sales", ["Region", "Sales"], rows)
    write_meta("sales", {
        "id": "sales",
        "name": "Sales",
        "description": "Sample regional sales performance for a retail superstore across four sales regions.",
        "defaultAggregate": "sum",
        "attributes": [
            {"name": "Region", "dataType": "text", "role": "dimension"},
            {"name": "Sales", "dataType": "numeric", "role": "measure", "unitSemantics": "USD"},
        ],
    })


# ---------------------------------------------------------------------------
# 2. housing

HOUSING_STATES = [
    "Washington", "California", "Texas", "Florida", "New York", "Colorado",
    "Arizona", "Oregon", "Nevada", "Utah", "Georgia", "Ohio", "Illinois",
    "Michigan", "Massachusetts", "Virginia", "North Carolina", "Tennessee",
    "Pennsylvania", "Minnesota",
]
HOME_TYPES = ["House", "Condo", "Apartment", "Townhouse"]


def gen_housing() -> None:
    base = {s: 180000 + 22000 * (i % 11) for i, s in enumerate(HOUSING_STATES)}
    type_factor = {"House": 1.35, "Condo": 1.0, "Apartment": 0.8, "Townhouse": 1.1}
    rows = []
    for state in HOUSING_STATES:
        for home_type in HOME_TYPES:
            for year in (2019, 2020, 2021, 2022):
                price = base[state] * type_factor[home_type] * (1 + 0.06 * (year - 2019))
                price += rng.uniform(-9000, 9000)
                rows.append([state, home_type, f"{year}-06-15", round(price)])
    write_csv("housing", ["State", "Home Type", "Date", "Price"], rows)
    write_meta("housing", {
        "id": "housing",
        "name": "Housing",
        "description": "Median home listing prices across US states by housing type.",
        "defaultAggregate": "average",
        "attributes": [
            {"name": "State", "dataType": "geospatial", "role": "dimension"},
            {"name": "Home Type", "dataType": "text", "role": "dimension",
             "synonyms": ["housing", "property type"]},
            {"name": "Date", "dataType": "temporal", "role": "dimension"},
            {"name": "Price", "dataType": "numeric", "role": "measure", "unitSemantics": "USD"},
        ],
    })


# ---------------------------------------------------------------------------
# 3. movies

GENRES = ["Action", "Comedy", "Drama", "Horror", "Romance", "Sci-Fi"]
TITLE_A = ["Crimson", "Silent", "Golden", "Midnight", "Broken", "Electric",
           "Savage", "Hidden", "Burning", "Frozen", "Stolen", "Endless",
           "Fearless", "Shattered", "Lucky", "Restless", "Velvet", "Iron",
           "Hollow", "Distant"]
TITLE_B = ["Voyage", "Empire", "Horizon", "Promise", "Garden", "Reckoning",
           "Summer", "Kingdom", "Echo", "Harvest", "Mirage", "Crossing",
           "Vendetta", "Paradox", "Legacy", "Carnival", "Outpost", "Riddle",
           "Anthem", "Harbor"]


def gen_movies() -> None:
    genre_base = {"Action": 95, "Comedy": 38, "Drama": 30, "Horror": 18,
                  "Romance": 26, "Sci-Fi": 110}
    rows = []
    used = set()
    for i in range(300):
        genre = GENRES[i % len(GENRES)]
        year = 1985 + (i * 7) % 38
        while True:
            title = f"The {rng.choice(TITLE_A)} {rng.choice(TITLE_B)}"
            if title not in used:
                used.add(title)
                break
        month = 1 + (i * 5) % 12
        budget = genre_base[genre] * (1 + 0.025 * (year - 1985)) * rng.uniform(0.6, 1.4)
        gross = budget * rng.uniform(0.8, 3.2)
        rows.append([title, genre, f"{year}-{month:02d}-01",
                     round(budget * 1e6), round(gross * 1e6)])
    write_csv("movies", ["Title", "Genre", "Release Date", "Budget", "Gross"], rows)
    write_meta("movies", {
        "id": "movies",
        "name": "Movies",
        "description": "Feature film budgets, box office gross, and genres over four decades of releases.",
        "defaultAggregate": "average",
        "attributes": [
            {"name": "Title", "dataType": "text", "role": "dimension",
             "synonyms": ["movie", "film"]},
            {"name": "Genre", "dataType": "text", "role": "dimension"},
            {"name": "Release Date", "dataType": "temporal", "role": "dimension"},
            {"name": "Budget", "dataType": "numeric", "role": "measure", "unitSemantics": "USD"},
            {"name": "Gross", "dataType": "numeric", "role": "measure", "unitSemantics": "USD"},
        ],
    })


# ---------------------------------------------------------------------------
# 4. covid

COVID_COUNTRIES = ["Canada", "United States", "Brazil", "India", "France",
                   "Germany", "Japan", "Australia", "South Africa", "Mexico"]


def gen_covid() -> None:
    scale = {c: 10000 + 150000 * (i % 7) for i, c in enumerate(COVID_COUNTRIES)}
    rows = []
    for country in COVID_COUNTRIES:
        for year in (2020, 2021, 2022):
            for month in range(1, 13):
                wave = 1 + 0.8 * ((month * 7 + year) % 5)
                cases = scale[country] * wave * rng.uniform(0.7, 1.3)
                deaths = cases * rng.uniform(0.004, 0.02)
                rows.append([country, f"{year}-{month:02d}-01",
                             round(cases), round(deaths)])
    write_csv("covid", ["Country", "Date", "Cases", "Deaths"], rows)
    write_meta("covid", {
        "id": "covid",
        "name": "Covid",
        "description": "Monthly reported covid cases and deaths by country.",
        "defaultAggregate": "sum",
        "attributes": [
            {"name": "Country", "dataType": "geospatial", "role": "dimension"},
            {"name": "Date", "dataType": "temporal", "role": "dimension"},
            {"name": "Cases", "dataType": "numeric", "role": "measure"},
            {"name": "Deaths", "dataType": "numeric", "role": "measure"},
        ],
    })


# ---------------------------------------------------------------------------
# 5. crime

CRIME_STATES = ["California", "Texas", "Florida", "New York", "Illinois",
                "Ohio", "Georgia", "Michigan", "Arizona", "Washington",
                "Colorado", "Oregon", "Nevada", "Virginia", "Maryland",
                "Tennessee", "Missouri", "Indiana", "Wisconsin", "Minnesota"]
OFFENSES = ["Theft", "Burglary", "Robbery", "Assault"]


def gen_crime() -> None:
    rows = []
    for state in CRIME_STATES:
        pop_factor = 0.5 + (hash(state) % 17) / 10.0
        for offense in OFFENSES:
            base = {"Theft": 42000, "Burglary": 17000, "Robbery": 6000,
                    "Assault": 11000}[offense]
            for year in range(2016, 2021):
                count = base * pop_factor * (1 - 0.03 * (year - 2016))
                count *= rng.uniform(0.85, 1.15)
                rows.append([state, offense, year, round(count)])
    write_csv("crime", ["State", "Crime", "Year", "Incidents"], rows)
    write_meta("crime", {
        "id": "crime",
        "name": "Crime",
        "description": "Reported crime incidents by state, offense, and year.",
        "defaultAggregate": "sum",
        "attributes": [
            {"name": "State", "dataType": "geospatial", "role": "dimension"},
            {"name": "Crime", "dataType": "text", "role": "dimension"},
            {"name": "Year", "dataType": "temporal", "role": "dimension"},
            {"name": "Incidents", "dataType": "numeric", "role": "measure"},
        ],
    })


# ---------------------------------------------------------------------------
# 6. coffee

PRODUCTS = ["Espresso", "Cappuccino", "Latte", "Mocha", "Drip Coffee", "Tea"]
COFFEE_CITIES = ["Seattle", "Portland", "Austin", "Boston", "Chicago", "Denver"]


def gen_coffee() -> None:
    price = {"Espresso": 3.0, "Cappuccino": 4.5, "Latte": 4.75, "Mocha": 5.0,
             "Drip Coffee": 2.5, "Tea": 2.75}
    rows = []
    for product in PRODUCTS:
        for city in COFFEE_CITIES:
            for month in range(1, 13):
                units = round(400 * rng.uniform(0.5, 1.6))
                revenue = round(units * price[product] * rng.uniform(0.95, 1.05), 2)
                rows.append([product, city, f"2022-{month:02d}-01", revenue, units])
    write_csv("coffee", ["Product", "City", "Date", "Revenue", "Units Sold"], rows)
    write_meta("coffee", {
        "id": "coffee",
        "name": "Coffee",
        "description": "Coffee shop beverage revenue and units sold by product and city.",
        "defaultAggregate": "sum",
        "attributes": [
            {"name": "Product", "dataType": "text", "role": "dimension",
             "synonyms": ["drink", "beverage"]},
            {"name": "City", "dataType": "geospatial", "role": "dimension"},
            {"name": "Date", "dataType": "temporal", "role": "dimension"},
            {"name": "Revenue", "dataType": "numeric", "role": "measure", "unitSemantics": "USD"},
            {"name": "Units Sold", "dataType": "numeric", "role": "measure"},
        ],
    })


# ---------------------------------------------------------------------------
# 7. colleges

REGIONS = ["Northeast", "Midwest", "South", "West"]
COLLEGE_A = ["Ashford", "Brighton", "Cedarville", "Dunmore", "Easton",
             "Fairview", "Glenwood", "Hartfield", "Ironwood", "Juniper",
             "Kingsley", "Lakewood", "Maplecrest", "Northgate", "Oakmont",
             "Pinehurst", "Quincy", "Ridgeway", "Stonebrook", "Thornton",
             "Underhill", "Valemont", "Westbrook", "Yardley", "Zephyr"]
COLLEGE_B = ["College", "University", "Institute", "State University",
             "Technical College", "Liberal Arts College"]


def gen_colleges() -> None:
    rows = []
    i = 0
    for a in COLLEGE_A:
        for b in COLLEGE_B:
            region = REGIONS[i % 4]
            tuition = round(rng.uniform(9000, 58000) / 100) * 100
            admission = round(rng.uniform(0.08, 0.92), 2)
            enrollment = round(rng.uniform(800, 42000))
            rows.append([f"{a} {b}", region, tuition, admission, enrollment])
            i += 1
    write_csv("colleges", ["Institution", "Region", "Tuition", "Admission Rate", "Enrollment"], rows)
    write_meta("colleges", {
        "id": "colleges",
        "name": "Colleges",
        "description": "Annual tuition, admission rates, and enrollment for colleges and universities by region.",
        "defaultAggregate": "average",
        "attributes": [
            {"name": "Institution", "dataType": "text", "role": "dimension",
             "synonyms": ["college", "university", "school"]},
            {"name": "Region", "dataType": "text", "role": "dimension"},
            {"name": "Tuition", "dataType": "numeric", "role": "measure", "unitSemantics": "USD"},
            {"name": "Admission Rate", "dataType": "numeric", "role": "measure"},
            {"name": "Enrollment", "dataType": "numeric", "role": "measure"},
        ],
    })


# ---------------------------------------------------------------------------
# 8. sports

TEAMS = ["Sharks", "Eagles", "Hawks", "Lions", "Bulls", "Wolves", "Tigers", "Bears"]
POSITIONS = ["Quarterback", "Running Back", "Wide Receiver", "Tight End"]
FIRST = ["Marcus", "Jalen", "Derek", "Tyler", "Jordan", "Chris", "Austin",
         "Devin", "Trevor", "Malik", "Caleb", "Brandon", "Isaiah", "Logan", "Nate"]
LAST = ["Carter", "Reed", "Brooks", "Hayes", "Coleman", "Fletcher", "Dawson",
        "Maxwell", "Porter", "Sutton", "Vance", "Whitfield", "Beckett", "Ramsey", "Holt"]


def gen_sports() -> None:
    players = []
    used = set()
    while len(players) < 60:
        name = f"{rng.choice(FIRST)} {rng.choice(LAST)}"
        if name not in used:
            used.add(name)
            players.append(name)
    rows = []
    for idx, player in enumerate(players):
        team = TEAMS[idx % len(TEAMS)]
        position = POSITIONS[idx % len(POSITIONS)]
        for season in range(2015, 2023):
            yards = round(rng.uniform(150, 1800))
            tds = round(yards / rng.uniform(90, 260))
            rows.append([player, team, position, season, yards, tds])
    write_csv("sports", ["Player", "Team", "Position", "Season", "Yards", "Touchdowns"], rows)
    write_meta("sports", {
        "id": "sports",
        "name": "Sports",
        "description": "American football player statistics by team, position, and season.",
        "defaultAggregate": "sum",
        "attributes": [
            {"name": "Player", "dataType": "text", "role": "dimension"},
            {"name": "Team", "dataType": "text", "role": "dimension"},
            {"name": "Position", "dataType": "text", "role": "dimension"},
            {"name": "Season", "dataType": "temporal", "role": "dimension"},
            {"name": "Yards", "dataType": "numeric", "role": "measure"},
            {"name": "Touchdowns", "dataType": "numeric", "role": "measure"},
        ],
    })


# ---------------------------------------------------------------------------
# Visualization-metadata corpus (1,000 records).

AUTHORS = [
    "Ada Whitmore", "Ben Okafor", "Carla Mendes", "Daniel Voss", "Elena Brandt",
    "Felix Nguyen", "Grace Lindqvist", "Hugo Arnaud", "Ines Castillo",
    "Jonah Petrov", "Kira Tanaka", "Liam Doherty", "Mara Kovacs",
    "Noel Abara", "Olga Sorensen", "Pedro Alves", "Quinn Harper",
    "Rosa Delgado", "Sam Whitaker", "Tessa Morgan", "Umar Farouk",
    "Vera Lindgren", "Wes Calloway", "Ximena Rojas", "Yusuf Demir",
    "Zoe Fairbanks", "Arthur Pemberton", "Bianca Ferrari", "Colin Strand",
    "Dina Rashid", "Elias Harmon", "Freya Dalgaard", "Gideon Marsh",
    "Hana Suzuki", "Ivan Petric", "June Callahan", "Kofi Mensah",
    "Lena Hoffmann", "Milo Santoro", "Nadia Osei",
]

TOPICS = {
    "elections": {
        "weight": 11,
        "titles": [
            "{year} US Election Results by County", "Presidential Polls Over Time",
            "Senate Seats Won by Party {year}", "Voter Turnout Across States {year}",
            "Swing State Margins {year}", "Electoral College Map {year}",
            "Midterm Elections Dashboard {year}", "Ballot Measures Passed by State",
        ],
        "tags": ["elections", "politics", "voting", "usa", "president", "polls"],
        "charts": [("map", 4), ("bar", 3), ("line", 2), ("pie", 1)],
        "years": [2016, 2016, 2018, 2020, 2020, 2020, 2022],
        "desc": "Election outcomes and voting patterns visualized from public returns.",
    },
    "stocks": {
        "weight": 10,
        "titles": [
            "Tech Stocks Market Cap Breakdown", "S&P Sector Performance {year}",
            "Stock Market Heat Check {year}", "Portfolio Allocation by Sector",
            "Dividend Yields of Blue Chip Stocks", "Stock Index Growth Since {year}",
            "Market Capitalization of Global Stocks",
        ],
        "tags": ["stocks", "finance", "market", "investing", "economy"],
        "charts": [("treemap", 5), ("line", 3), ("bar", 2), ("heatmap", 1)],
        "years": [2017, 2018, 2019, 2020, 2021, 2022],
        "desc": "Equity market structure and performance across sectors and periods.",
    },
    "covid": {
        "weight": 10,
        "titles": [
            "Covid Cases by Country", "Global Covid Trends {year}",
            "Vaccination Progress Tracker", "Covid Waves Timeline {year}",
            "Hospitalizations vs Cases", "Covid Deaths per Million by Country",
        ],
        "tags": ["covid", "pandemic", "health", "world", "cases"],
        "charts": [("line", 4), ("map", 3), ("bar", 2), ("scatterplot", 1)],
        "years": [2020, 2020, 2021, 2021, 2022],
        "desc": "Pandemic spread and response indicators tracked over time.",
    },
    "population": {
        "weight": 9,
        "titles": [
            "World Population Growth 1950-2050", "Population Density by Country",
            "Urban vs Rural Population Shift", "Population Pyramid of {country}",
            "Megacities Population Ranking", "World Population by Continent",
        ],
        "tags": ["population", "world", "demographics", "growth", "census"],
        "charts": [("line", 3), ("map", 3), ("bar", 3), ("area", 1)],
        "years": [2015, 2016, 2017, 2018, 2019, 2021],
        "desc": "Demographic change and distribution across the globe.",
    },
    "crime": {
        "weight": 8,
        "titles": [
            "Crime in USA by State", "Violent Crime Trends {year}",
            "Property Crime Rates by City", "Burglary vs Theft Rates",
            "Crime Heatmap of Major Cities", "Homicide Rates by Country",
        ],
        "tags": ["crime", "usa", "safety", "cities", "statistics"],
        "charts": [("map", 4), ("bar", 3), ("heatmap", 2), ("line", 1)],
        "years": [2015, 2016, 2017, 2018, 2019, 2020],
        "desc": "Reported offense rates and safety statistics by geography.",
    },
    "olympics": {
        "weight": 8,
        "titles": [
            "Olympics Medal Count {year}", "Olympic Records Through History",
            "Gold Medals by Country {year}", "Olympics Winners Timeline",
            "Athlete Age vs Performance", "Host Cities of the Olympics",
        ],
        "tags": ["olympics", "sports", "medals", "athletes", "games"],
        "charts": [("bar", 4), ("line", 2), ("scatterplot", 2), ("map", 1)],
        "years": [2016, 2018, 2020, 2021, 2022],
        "desc": "Olympic results, medal tables, and athlete performance.",
    },
    "football": {
        "weight": 8,
        "titles": [
            "NFL Drafts First Round Picks {year}", "Quarterback Passing Yards {year}",
            "NFL Team Wins by Season", "Draft Position vs Career Length",
            "Fantasy Football Points Leaders", "NFL Drafts by College",
        ],
        "tags": ["nfl", "football", "drafts", "sports", "players"],
        "charts": [("bar", 4), ("scatterplot", 3), ("line", 2)],
        "years": [2017, 2018, 2019, 2020, 2021, 2022],
        "desc": "Professional football drafts and player production.",
    },
    "worldcup": {
        "weight": 7,
        "titles": [
            "Fifa World Cup Winners History", "World Cup {year} Goals by Team",
            "World Cup Attendance Records", "Top Scorers of the World Cup",
            "World Cup Qualifying Map {year}",
        ],
        "tags": ["fifa", "world cup", "soccer", "football", "goals"],
        "charts": [("bar", 4), ("line", 2), ("map", 2), ("sankey", 1)],
        "years": [2014, 2018, 2018, 2022, 2022],
        "desc": "International soccer tournament history and results.",
    },
    "movies": {
        "weight": 8,
        "titles": [
            "Movie Budgets vs Box Office Gross", "Top Grossing Movies {year}",
            "Film Genres Popularity Over Time", "Oscar Winners by Genre",
            "Movie Ratings Distribution", "Streaming vs Theater Revenue",
        ],
        "tags": ["movies", "film", "box office", "entertainment", "hollywood"],
        "charts": [("scatterplot", 4), ("bar", 3), ("line", 2), ("histogram", 1)],
        "years": [2016, 2017, 2018, 2019, 2021, 2022],
        "desc": "Film industry economics and audience trends.",
    },
    "housing": {
        "weight": 7,
        "titles": [
            "Housing Prices Across USA", "Home Price Index {year}",
            "Rent vs Buy Affordability Map", "Median Home Prices by State",
            "Housing Market Inventory Trends",
        ],
        "tags": ["housing", "real estate", "prices", "usa", "economy"],
        "charts": [("map", 4), ("line", 3), ("bar", 2)],
        "years": [2018, 2019, 2020, 2021, 2022],
        "desc": "Residential real estate prices and market conditions.",
    },
    "climate": {
        "weight": 7,
        "titles": [
            "Global Temperature Anomalies", "CO2 Emissions by Country {year}",
            "Sea Level Rise Projections", "Renewable Energy Adoption {year}",
            "Climate Stripes 1880-2022",
        ],
        "tags": ["climate", "temperature", "emissions", "environment", "energy"],
        "charts": [("line", 4), ("heatmap", 2), ("map", 2), ("area", 1)],
        "years": [2015, 2017, 2019, 2020, 2021, 2022],
        "desc": "Climate indicators and environmental change over time.",
    },
    "economy": {
        "weight": 7,
        "titles": [
            "Unemployment Rate by State {year}", "GDP Growth of Major Economies",
            "Inflation Tracker {year}", "Minimum Wage Across States",
            "Trade Balance Flows {year}",
        ],
        "tags": ["economy", "unemployment", "gdp", "inflation", "jobs"],
        "charts": [("line", 3), ("map", 3), ("bar", 2), ("sankey", 1)],
        "years": [2015, 2016, 2018, 2020, 2021, 2022],
        "desc": "Macroeconomic indicators across regions and time.",
    },
}

COUNTRY_FILL = ["Japan", "Brazil", "India", "Germany", "Canada", "Mexico"]

MARK_FOR_CHART = {
    "bar": "bar", "line": "line", "scatterplot": "point", "map": "geoshape",
    "treemap": "rect", "heatmap": "rect", "pie": "arc", "histogram": "bar",
    "area": "area", "sankey": "path", "boxplot": "rect", "sunburst": "arc",
    "gantt": "rect", "network": "path",
}


def weighted_choice(pairs: list[tuple[str, int]]) -> str:
    total = sum(w for _, w in pairs)
    pick = rng.uniform(0, total)
    acc = 0.0
    for value, weight in pairs:
        acc += weight
        if pick <= acc:
            return value
    return pairs[-1][0]


def gen_viz_corpus(count: int = 1000) -> None:
    topic_names = list(TOPICS)
    weights = [TOPICS[t]["weight"] for t in topic_names]
    total_weight = sum(weights)
    quota = {t: round(count * TOPICS[t]["weight"] / total_weight) for t in topic_names}
    # Fix rounding drift onto the first topic.
    quota[topic_names[0]] += count - sum(quota.values())

    records = []
    serial = 0
    for topic in topic_names:
        spec = TOPICS[topic]
        for _ in range(quota[topic]):
            serial += 1
            doc_id = f"v{serial:04d}"
            year = rng.choice(spec["years"])
            title = rng.choice(spec["titles"]).format(
                year=year, country=rng.choice(COUNTRY_FILL))
            primary = weighted_choice(spec["charts"])
            chart_types = [primary]
            if rng.random() < 0.22:
                second = weighted_choice(spec["charts"])
                if second != primary:
                    chart_types.append(second)
            month = rng.randint(1, 12)
            day = rng.randint(1, 28)
            tags = rng.sample(spec["tags"], k=min(4, len(spec["tags"])))
            author = rng.choice(AUTHORS)
            records.append({
                "id": doc_id,
                "title": title,
                "caption": f"{title} — {spec['desc']}",
                "tags": tags,
                "description": spec["desc"],
                "authorName": author,
                "createdDate": f"{year}-{month:02d}-{day:02d}",
                "chartTypes": chart_types,
                "markTypes": sorted({MARK_FOR_CHART[c] for c in chart_types}),
                "sourceUrl": f"https://viz.example.com/workbooks/{doc_id}",
                "thumbnailRef": f"thumbs/{doc_id}.png",
            })

    path = DATA / "viz_corpus.ndjson"
    with path.open("w") as fh:
        for record in records:
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")
    print(f"wrote {path} ({len(records)} records)")


def main() -> None:
    SOURCES.mkdir(parents=True, exist_ok=True)
    gen_sales()
    gen_housing()
    gen_movies()
    gen_covid()
    gen_crime()
    gen_coffee()
    gen_colleges()
    gen_sports()
    gen_viz_corpus()


if __name__ == "__main__":
    main()
