/**
 * Entry point for the bundled page: reads the embedded JSON payload, runs it
 * through validation and mounts the viewer. Any failure ends in a visible
 * banner instead of a blank page.
 */

import { readGraph, SchemaError } from "./schema";
import { showBanner, Viewer } from "./viewer";

export function boot(doc: Document = document): Viewer | null {
  const app = doc.getElementById("app");
  if (!app) return null;

  const holder = doc.getElementById("graph-data");
  if (!holder) {
    showBanner(app, "no embedded graph data found (missing #graph-data element)");
    return null;
  }

  let parsed: unknown;
  try {
    parsed = JSON.parse(holder.textContent ?? "");
  } catch (err) {
    showBanner(app, `could not parse the embedded graph data: ${(err as Error).message}`);
    return null;
  }

  try {
    return new Viewer(app, readGraph(parsed));
  } catch (err) {
    if (err instanceof SchemaError) {
      showBanner(app, `graph data failed validation at ${err.field}: ${err.message.slice(err.field.length + 2)}`);
    } else {
      showBanner(app, `viewer failed to start: ${(err as Error).message}`);
    }
    return null;
  }
}

// The bundle is inlined at the end of the body, after the payload element.
if (typeof document !== "undefined" && document.getElementById("graph-data")) {
  boot();
}
