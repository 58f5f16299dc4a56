import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { HifDocument, LayoutDoc } from "../src/model.js";

const here = dirname(fileURLToPath(import.meta.url));

function load<T>(name: string): T {
  return JSON.parse(readFileSync(join(here, "fixtures", name), "utf-8")) as T;
}

export const h0Hif = (): HifDocument => load<HifDocument>("h0.hif.json");
export const h0Layout = (): LayoutDoc => load<LayoutDoc>("h0.layout.json");
export const h0ComponentsS1 = (): string[][] => load<string[][]>("h0.components.s1.json");
