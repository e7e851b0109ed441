/** Appearance palette: color pick -> KNN strip -> per-click regeneration. */

import type { KnnEntry, ServiceClient } from "./api.js";

export const KNN_STRIP_SIZE = 8;

export interface PaletteView {
  /** Replace the thumbnail strip, in the exact order given. */
  showEntries(entries: KnnEntry[]): void;
  /** Library empty: prompt the user to import references. */
  showImportPrompt(): void;
}

export class Palette {
  entries: KnnEntry[] = [];

  constructor(
    private readonly client: ServiceClient,
    private readonly view: PaletteView,
    private readonly onPick: (refId: string) => void,
  ) {}

  /** Color picked on the wheel: query KNN and show the strip. */
  async pickColor(rgbHex: string): Promise<void> {
    const res = await this.client.knn(rgbHex, KNN_STRIP_SIZE);
    this.entries = res.entries;
    if (this.entries.length === 0) {
      this.view.showImportPrompt();
      return;
    }
    this.view.showEntries(this.entries);
  }

  /** Thumbnail clicked: re-cluster around it and fire exactly one generate. */
  async pickEntry(refId: string): Promise<void> {
    const entry = this.entries.find((e) => e.id === refId);
    this.onPick(refId); // one generate per pick
    if (entry) {
      const hex = entry.mean_rgb
        .map((v) => Math.round(v * 255).toString(16).padStart(2, "0"))
        .join("");
      const res = await this.client.knn(hex, KNN_STRIP_SIZE);
      this.entries = res.entries;
      this.view.showEntries(this.entries);
    }
  }
}
