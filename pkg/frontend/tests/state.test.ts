import { describe, expect, it } from "vitest";

import {
  dateRangeSet,
  facetResultArrived,
  facetToggled,
  initialState,
  queryFailed,
  queryStarted,
  querySucceeded,
  sourceResultArrived,
  sourceSwitched,
} from "../src/state.js";
import type { HybridResult } from "../src/types.js";
import qaFixture from "./fixtures/search_qa.json" with { type: "json" };
import keywordFixture from "./fixtures/search_keyword.json" with { type: "json" };
import coffeeFixture from "./fixtures/search_qa_coffee.json" with { type: "json" };

const qaResult = qaFixture as unknown as HybridResult;
const keywordResult = keywordFixture as unknown as HybridResult;
const coffeeResult = coffeeFixture as unknown as HybridResult;

function afterQuery(): ReturnType<typeof initialState> {
  let s = queryStarted(initialState(), "sales by region");
  s = querySucceeded(s, s.seq, qaResult);
  return s;
}

describe("query lifecycle", () => {
  it("starting a query sets loading and clears the banner", () => {
    const s = queryStarted({ ...initialState(), error: "old" }, "sales by region");
    expect(s.loading).toBe(true);
    expect(s.error).toBeNull();
    expect(s.query).toBe("sales by region");
  });

  it("success stores the result, resets facets, selects the qa source", () => {
    const s = afterQuery();
    expect(s.loading).toBe(false);
    expect(s.lastResult?.qa?.sourceId).toBe("sales");
    expect(s.selectedSourceId).toBe("sales");
    expect(s.facets.authors.size).toBe(0);
  });

  it("a stale success is ignored (last write wins)", () => {
    let s = queryStarted(initialState(), "first");
    const staleSeq = s.seq;
    s = queryStarted(s, "second");
    const applied = querySucceeded(s, staleSeq, qaResult);
    expect(applied).toBe(s);
    expect(applied.lastResult).toBeNull();
  });

  it("failure keeps previous results and raises the banner", () => {
    let s = afterQuery();
    s = queryStarted(s, "next query");
    s = queryFailed(s, s.seq, "network down");
    expect(s.error).toBe("network down");
    expect(s.lastResult?.qa?.sourceId).toBe("sales"); // retained
    expect(s.loading).toBe(false);
  });
});

describe("facet interactions", () => {
  it("toggling adds then removes a selection", () => {
    let s = afterQuery();
    s = facetToggled(s, "chartTypes", "map");
    expect(s.facets.chartTypes.has("map")).toBe(true);
    s = facetToggled(s, "chartTypes", "map");
    expect(s.facets.chartTypes.has("map")).toBe(false);
  });

  it("a facet refresh swaps the general results but never clears qa", () => {
    let s = afterQuery();
    s = facetToggled(s, "chartTypes", "map");
    s = facetResultArrived(s, s.seq, keywordResult);
    expect(s.lastResult?.general.results.length).toBe(
      keywordResult.general.results.length,
    );
    expect(s.lastResult?.qa?.sourceId).toBe("sales"); // invariant
  });

  it("superseded facet responses are dropped", () => {
    let s = afterQuery();
    s = facetToggled(s, "chartTypes", "map");
    const firstSeq = s.seq;
    s = facetToggled(s, "chartTypes", "bar"); // newer interaction in flight
    const afterStale = facetResultArrived(s, firstSeq, keywordResult);
    expect(afterStale).toBe(s);
  });

  it("date range updates facets without touching the result", () => {
    let s = afterQuery();
    s = dateRangeSet(s, "2020-01", "2020-12");
    expect(s.facets.from).toBe("2020-01");
    expect(s.facets.to).toBe("2020-12");
    expect(s.lastResult?.qa).toBeDefined();
  });
});

describe("data source switching", () => {
  it("replaces only the qa block, general results stay put", () => {
    let s = afterQuery();
    const generalBefore = s.lastResult!.general;
    s = sourceSwitched(s, "coffee");
    expect(s.selectedSourceId).toBe("coffee");
    s = sourceResultArrived(s, s.seq, coffeeResult);
    expect(s.lastResult?.qa?.sourceId).toBe("coffee");
    expect(s.lastResult?.general).toBe(generalBefore);
  });

  it("stale source responses are dropped", () => {
    let s = afterQuery();
    s = sourceSwitched(s, "coffee");
    const staleSeq = s.seq;
    s = sourceSwitched(s, "movies");
    const after = sourceResultArrived(s, staleSeq, coffeeResult);
    expect(after).toBe(s);
  });
});
