// Criterion: each enumerated interaction emits exactly one usage event.

import { beforeEach, expect, it } from "vitest";

import { App } from "../src/app.js";
import { setLanguage } from "../src/i18n.js";
import { makeHarness, settle } from "./stub.js";

beforeEach(() => {
  document.body.innerHTML = "";
  setLanguage("en");
});

function click(root: ParentNode, selector: string): void {
  const node = root.querySelector<HTMLElement>(selector);
  if (!node) {
    throw new Error(`missing element: ${selector}`);
  }
  node.click();
}

async function mountApp() {
  const harness = makeHarness();
  const app = new App(harness.api, harness.usage, () => undefined);
  document.body.append(app.root);
  await settle(harness.usage);
  return { ...harness, app };
}

it("tab opens emit one tab_opened each with the tab slug", async () => {
  const { stub, usage, app } = await mountApp();
  click(app.root, "[data-tab='locator']");
  click(app.root, "[data-tab='translator']");
  click(app.root, "[data-tab='translator']");  // re-click: already active, no event
  await settle(usage);
  const tabEvents = stub.events().filter((e) => e.kind === "tab_opened");
  expect(tabEvents.map((e) => e.target)).toEqual(["resume", "locator", "translator"]);
});

it("accordion expansion emits one faq-expand per question", async () => {
  const { stub, usage, app } = await mountApp();
  click(app.root, "[data-tab='common-questions']");
  await settle(usage);
  const headers = app.root.querySelectorAll<HTMLElement>(".accordion-header");
  headers[0].click();   // expand
  headers[0].click();   // collapse: not an expansion
  headers[1].click();   // expand another
  await settle(usage);
  const expands = stub.events().filter(
    (e) => e.kind === "button_clicked" && e.target === "faq-expand");
  expect(expands).toHaveLength(2);
});

it("phrase playback emits one audio_played with phrase and language", async () => {
  const { stub, usage, app } = await mountApp();
  click(app.root, "[data-tab='translator']");
  await settle(usage);
  click(app.root, ".accordion-header");  // open the first phrase category
  await settle(usage);
  click(app.root, "[data-testid='play-common-hello']");
  await settle(usage);
  const plays = stub.events().filter((e) => e.kind === "audio_played");
  expect(plays).toHaveLength(1);
  expect(plays[0].target).toBe("common-hello:en");
});

it("custom translation emits one translate-submit", async () => {
  const { stub, usage, app } = await mountApp();
  click(app.root, "[data-tab='translator']");
  await settle(usage);
  const input = app.root.querySelector<HTMLTextAreaElement>("[data-testid='translate-input']")!;
  input.value = "hola";
  click(app.root, "[data-testid='translate-submit']");
  await settle(usage);
  const submits = stub.events().filter(
    (e) => e.kind === "button_clicked" && e.target === "translate-submit");
  expect(submits).toHaveLength(1);
  expect(app.root.querySelector("[data-testid='translate-result']")!.textContent).toBe("hello");
});

it("locator search emits one locator-search and renders the map iframe", async () => {
  const { stub, usage, app } = await mountApp();
  click(app.root, "[data-tab='locator']");
  await settle(usage);
  click(app.root, "[data-category='food pantries']");
  await settle(usage);
  const searches = stub.events().filter(
    (e) => e.kind === "button_clicked" && e.target === "locator-search");
  expect(searches).toHaveLength(1);
  const frame = app.root.querySelector<HTMLIFrameElement>("[data-testid='locator-map']");
  expect(frame!.src).toContain("q=food+pantry+near+me");
});

it("career panel expansion emits one career_panel_opened with the kind slug", async () => {
  const { stub, usage, app } = await mountApp();
  click(app.root, "[data-tab='career-services']");
  await settle(usage);
  click(app.root, ".accordion-header");  // first panel: american-job-center
  await settle(usage);
  const panels = stub.events().filter((e) => e.kind === "career_panel_opened");
  expect(panels).toHaveLength(1);
  expect(panels[0].target).toBe("american-job-center");
});

it("resume build emits one resume_generated on success", async () => {
  const { stub, usage, app } = await mountApp();
  const name = app.root.querySelector<HTMLInputElement>("[data-testid='resume-name']")!;
  name.value = "Rosa Ibarra";
  click(app.root, "[data-testid='resume-build']");
  await settle(usage);
  const generated = stub.events().filter((e) => e.kind === "resume_generated");
  expect(generated).toHaveLength(1);
  expect(generated[0].target).toBe("resume");
});

it("interview start, turn, and end each emit one event", async () => {
  const { stub, usage, app } = await mountApp();
  click(app.root, "[data-testid='interview-start']");
  await settle(usage);
  const answer = app.root.querySelector<HTMLTextAreaElement>("[data-testid='interview-answer']")!;
  answer.value = "I have been a cook for five years.";
  click(app.root, "[data-testid='interview-turn']");
  await settle(usage);
  click(app.root, "[data-testid='interview-end']");
  await settle(usage);
  const clicks = stub.events().filter((e) => e.kind === "button_clicked");
  expect(clicks.filter((e) => e.target === "interview-start")).toHaveLength(1);
  expect(clicks.filter((e) => e.target === "interview-turn")).toHaveLength(1);
  expect(clicks.filter((e) => e.target === "interview-end")).toHaveLength(1);
  expect(app.root.querySelector("[data-testid='interview-summary']")!.textContent)
    .toContain("1 response reviewed");
});

it("language switch emits one language-switch event", async () => {
  const { stub, usage, app } = await mountApp();
  app.switchLanguage("fr");
  await settle(usage);
  const switches = stub.events().filter(
    (e) => e.kind === "button_clicked" && e.target === "language-switch");
  expect(switches).toHaveLength(1);
});
