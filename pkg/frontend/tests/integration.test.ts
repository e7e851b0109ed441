/** Live-service integration: spawns the Python service and talks to it over
 * node fetch (no headless browser is available in this environment, so the
 * DOM layer is exercised by unit tests and these checks cover the contract
 * the UI relies on).
 *
 * Run with: HAIRGEN_INTEGRATION=1 npx vitest run tests/integration.test.ts
 */

import { spawn, ChildProcess } from "node:child_process";
import * as nodeZlib from "node:zlib";
import * as path from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ServiceClient } from "../src/api.js";
import { MaskBitmap } from "../src/mask.js";
import { decodePng, encodePng, fromBase64, toBase64, Zlib } from "../src/png.js";
import { pathToStroke, Point } from "../src/strokes.js";

const zlib: Zlib = {
  deflate: (d) => new Uint8Array(nodeZlib.deflateSync(d)),
  inflate: (d) => new Uint8Array(nodeZlib.inflateSync(d)),
};

const PORT = 8791;
const BASE = `http://127.0.0.1:${PORT}`;
const run = !!process.env.HAIRGEN_INTEGRATION;

function makeImageB64(w: number, h: number): string {
  const pixels = new Uint8Array(w * h * 3);
  for (let i = 0; i < pixels.length; i++) pixels[i] = (i * 31 + 7) % 256;
  return toBase64(encodePng({ width: w, height: h, channels: 3, pixels }, zlib));
}

function makeMask(w: number, h: number): MaskBitmap {
  const m = new MaskBitmap(w, h);
  m.applyBrush(w / 2, h / 2, 20, 1);
  m.applyBrush(w / 4, h / 2, 6, 1);
  return m;
}

function maskToB64(m: MaskBitmap): string {
  return toBase64(encodePng(
    { width: m.width, height: m.height, channels: 1, pixels: m.toGray() }, zlib));
}

function decodeGray(b64: string): MaskBitmap {
  const img = decodePng(fromBase64(b64), zlib);
  expect(img.channels).toBe(1);
  return MaskBitmap.fromGray(img.width, img.height, img.pixels);
}

/** Distance from pixel (x, y) to a polyline, for hole-bound checks. */
function distToSegments(x: number, y: number, pts: Point[]): number {
  let best = Infinity;
  for (let i = 0; i + 1 < pts.length; i++) {
    const [ax, ay] = pts[i];
    const [bx, by] = pts[i + 1];
    const dx = bx - ax;
    const dy = by - ay;
    const t = Math.max(0, Math.min(1, ((x - ax) * dx + (y - ay) * dy) / (dx * dx + dy * dy)));
    best = Math.min(best, Math.hypot(x - (ax + t * dx), y - (ay + t * dy)));
  }
  return best;
}

describe.skipIf(!run)("integration against a live service", () => {
  let proc: ChildProcess;
  const client = new ServiceClient(BASE);

  beforeAll(async () => {
    proc = spawn("python3", [path.join(__dirname, "serve_fixture.py"), String(PORT)], {
      stdio: "inherit",
    });
    for (let i = 0; i < 120; i++) {
      try {
        const h = await client.health();
        if (h.status === "ok") return;
      } catch {
        /* not up yet */
      }
      await new Promise((r) => setTimeout(r, 500));
    }
    throw new Error("service did not come up");
  }, 90_000);

  afterAll(() => {
    proc?.kill();
  });

  it("round-trips the painted mask pixel-exactly", async () => {
    const mask = makeMask(64, 64);
    const info = await client.createSession(makeImageB64(64, 64), maskToB64(mask));
    expect(info.hw).toEqual([64, 64]);
    const state = await client.sessionState(info.id);
    const back = decodeGray(state.mask);
    expect(back.equals(mask)).toBe(true);
  });

  it("stroke submission changes the preview only inside the hole", async () => {
    const mask = makeMask(64, 64);
    const info = await client.createSession(makeImageB64(64, 64), maskToB64(mask));
    const before = decodePng(fromBase64(
      (await client.sessionState(info.id)).orientation_preview), zlib);
    const drawn: Point[] = [];
    for (let i = 0; i <= 24; i++) drawn.push([16 + i, 32 + Math.sin(i / 4)]);
    const stroke = pathToStroke(drawn, 2)!;
    const res = await client.submitStrokes(info.id, [stroke]);
    expect(res.changed).toBe(true);
    const after = decodePng(fromBase64(res.orientation_preview), zlib);
    // hole = stroke dilated by 3x radius; allow a 1.5 px rasterization margin
    const bound = stroke.radius + 3 * stroke.radius + 1.5;
    let changed = 0;
    for (let y = 0; y < 64; y++) {
      for (let x = 0; x < 64; x++) {
        const i = (y * 64 + x) * before.channels;
        let diff = false;
        for (let c = 0; c < before.channels; c++) {
          if (before.pixels[i + c] !== after.pixels[i + c]) diff = true;
        }
        if (diff) {
          changed++;
          expect(distToSegments(x, y, stroke.points as Point[])).toBeLessThanOrEqual(bound);
        }
      }
    }
    expect(changed).toBeGreaterThan(0);
  });

  it("ignores an empty stroke list", async () => {
    const info = await client.createSession(makeImageB64(64, 64));
    const res = await client.submitStrokes(info.id, []);
    expect(res.changed).toBe(false);
  });

  it("generate is deterministic for identical conditions", async () => {
    const mask = makeMask(64, 64);
    const info = await client.createSession(makeImageB64(64, 64), maskToB64(mask));
    const a = await client.generate(info.id, {});
    const b = await client.generate(info.id, {});
    expect(a.image).toBe(b.image);
    expect(b.seq).toBe(a.seq + 1);
  });

  it("KNN strip request returns ordered entries with thumbnails", async () => {
    const res = await client.knn("804020", 8);
    expect(res.ids.length).toBe(8);
    expect(res.entries.map((e) => e.id)).toEqual(res.ids);
    for (const e of res.entries) expect(e.thumbnail.length).toBeGreaterThan(0);
    // re-querying at the first entry's own mean color ranks it first
    const hex = res.entries[0].mean_rgb
      .map((v) => Math.round(v * 255).toString(16).padStart(2, "0")).join("");
    const again = await client.knn(hex, 8);
    expect(again.ids[0]).toBe(res.ids[0]);
  });

  it("surfaces service errors with code and message", async () => {
    await expect(client.generate("no-such-session", {})).rejects.toMatchObject({
      name: "ServiceError",
      code: 404,
    });
  });
});
