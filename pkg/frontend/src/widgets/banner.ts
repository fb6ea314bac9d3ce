import { translated } from "../i18n.js";

// A localized failure banner with a retry action; shown whenever a backend
// call cannot complete.

export function errorBanner(onRetry: () => void): HTMLElement {
  const banner = document.createElement("div");
  banner.className = "error-banner";
  banner.append(translated("span", "error.offline"));
  const retry = translated("button", "error.retry");
  retry.addEventListener("click", onRetry);
  banner.append(retry);
  return banner;
}
