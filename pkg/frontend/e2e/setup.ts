// Spawns the real search service over the bundled corpus for the e2e suite.

import { execFileSync, spawn, type ChildProcess } from "node:child_process";
import { mkdtempSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { fileURLToPath } from "node:url";

const PORT = 8931;

let server: ChildProcess | null = null;
let workdir: string | null = null;

export default async function setup(): Promise<() => Promise<void>> {
  const repoRoot = fileURLToPath(new URL("../..", import.meta.url));
  workdir = mkdtempSync(join(tmpdir(), "hybridsearch-e2e-"));
  const configPath = join(workdir, "config.json");
  writeFileSync(configPath, JSON.stringify({ indexDir: join(workdir, "idx") }));

  execFileSync("python3", ["-m", "hybridsearch.cli", "--config", configPath, "index"], {
    cwd: repoRoot,
    stdio: "ignore",
  });
  server = spawn(
    "python3",
    ["-m", "hybridsearch.cli", "--config", configPath, "serve",
      "--port", String(PORT), "--no-llm"],
    { cwd: repoRoot, stdio: "ignore" },
  );

  const base = `http://127.0.0.1:${PORT}`;
  let healthy = false;
  for (let attempt = 0; attempt < 150; attempt += 1) {
    try {
      const response = await fetch(`${base}/healthz`);
      if (response.ok) {
        healthy = true;
        break;
      }
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 200));
  }
  if (!healthy) {
    throw new Error("search service did not become healthy");
  }
  process.env.E2E_BASE = base;

  return async () => {
    server?.kill("SIGTERM");
    if (workdir) rmSync(workdir, { recursive: true, force: true });
  };
}
