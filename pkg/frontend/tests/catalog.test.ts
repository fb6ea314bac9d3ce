// Criterion: switching language leaves zero untranslated catalog strings.

import { beforeEach, describe, expect, it } from "vitest";

import { App } from "../src/app.js";
import { LANGS, MESSAGES, MessageKey } from "../src/catalog.js";
import { setLanguage } from "../src/i18n.js";
import { makeHarness, settle } from "./stub.js";

beforeEach(() => {
  document.body.innerHTML = "";
  setLanguage("en");
});

describe("catalog", () => {
  it("has identical key sets across all four languages", () => {
    const reference = Object.keys(MESSAGES.en).sort();
    for (const lang of LANGS) {
      expect(Object.keys(MESSAGES[lang]).sort()).toEqual(reference);
    }
  });

  it("has no empty translations", () => {
    for (const lang of LANGS) {
      for (const [key, value] of Object.entries(MESSAGES[lang])) {
        expect(value.trim(), `${lang}:${key}`).not.toBe("");
      }
    }
  });
});

describe("language toggle", () => {
  it("re-renders every catalog-bound string with zero leftovers", async () => {
    const { api, usage } = makeHarness();
    const app = new App(api, usage);
    document.body.append(app.root);
    await settle(usage);

    for (const target of ["ar", "es", "fr"] as const) {
      app.switchLanguage(target);
      await settle(usage);
      const bound = Array.from(
        app.root.querySelectorAll<HTMLElement>("[data-i18n]"));
      expect(bound.length).toBeGreaterThan(10);
      const untranslated = bound.filter((node) => {
        const key = node.dataset.i18n as MessageKey;
        return node.textContent !== MESSAGES[target][key];
      });
      expect(untranslated.map((n) => n.dataset.i18n)).toEqual([]);
      const placeholders = Array.from(app.root.querySelectorAll<HTMLInputElement>(
        "[data-i18n-placeholder]"));
      for (const node of placeholders) {
        const key = node.dataset.i18nPlaceholder as MessageKey;
        expect(node.placeholder).toBe(MESSAGES[target][key]);
      }
    }
  });

  it("sets document direction for Arabic", async () => {
    const { api, usage } = makeHarness();
    const app = new App(api, usage);
    document.body.append(app.root);
    app.switchLanguage("ar");
    await settle(usage);
    expect(document.documentElement.dir).toBe("rtl");
    app.switchLanguage("en");
    await settle(usage);
    expect(document.documentElement.dir).toBe("ltr");
  });
});
