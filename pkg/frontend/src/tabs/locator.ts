import { ApiClient } from "../api.js";
import { MessageKey } from "../catalog.js";
import { translated } from "../i18n.js";
import { UsageRecorder } from "../usage.js";
import { errorBanner } from "../widgets/banner.js";

const CATEGORIES = [
  "affordable grocery stores",
  "culturally specific grocery stores",
  "farmers markets",
  "food pantries",
];

// The embedded map resolves "near me" client-side; this tab never reads or
// sends coordinates.

export function renderLocatorTab(api: ApiClient, usage: UsageRecorder): HTMLElement {
  const root = document.createElement("div");
  root.append(translated("h2", "loc.heading"));
  const buttons = document.createElement("div");
  buttons.className = "locator-buttons";
  const mapHost = document.createElement("div");
  mapHost.className = "locator-map";

  for (const category of CATEGORIES) {
    const button = translated("button", `loccat.${category}` as MessageKey);
    button.dataset.category = category;
    button.addEventListener("click", () => {
      usage.emit("button_clicked", "locator-search");
      void api.locator(category).then((body) => {
        const frame = document.createElement("iframe");
        frame.src = body.embed_url;
        frame.dataset.testid = "locator-map";
        mapHost.replaceChildren(frame);
      }).catch(() => {
        mapHost.replaceChildren(errorBanner(() => mapHost.replaceChildren()));
      });
    });
    buttons.append(button);
  }
  root.append(buttons, mapHost);
  return root;
}
