// Criterion: a reference question typed into the chat widget renders the
// stub backend's verbatim answer byte-for-byte.

import { beforeEach, expect, it } from "vitest";

import { setLanguage } from "../src/i18n.js";
import { ChatWidget } from "../src/widgets/chat.js";
import { makeHarness, settle, VERBATIM_ANSWER, VERBATIM_QUESTION } from "./stub.js";

beforeEach(() => {
  document.body.innerHTML = "";
  setLanguage("en");
});

function typedSend(widget: ChatWidget, text: string): Promise<void> {
  const input = widget.root.querySelector("textarea")!;
  input.value = text;
  return widget.send();
}

it("renders the verbatim corpus answer byte-equal", async () => {
  const { api, usage } = makeHarness();
  const widget = new ChatWidget(api, usage);
  document.body.append(widget.root);

  await typedSend(widget, VERBATIM_QUESTION);
  await settle(usage);

  const reply = widget.root.querySelector<HTMLElement>("[data-source='corpus-verbatim']");
  expect(reply).not.toBeNull();
  expect(reply!.textContent).toBe(VERBATIM_ANSWER);
  // the verified badge renders from the catalog, marking the curated source
  expect(widget.root.querySelector(".chat-badge")).not.toBeNull();
});

it("renders generated replies for off-corpus questions", async () => {
  const { api, usage } = makeHarness();
  const widget = new ChatWidget(api, usage);
  document.body.append(widget.root);

  await typedSend(widget, "How can I prepare for a dishwashing job?");
  await settle(usage);

  const reply = widget.root.querySelector<HTMLElement>("[data-source='generated']");
  expect(reply!.textContent).toContain("How can I prepare for a dishwashing job?");
  expect(widget.root.querySelector(".chat-badge")).toBeNull();
});

it("shows the failure note when the backend is unreachable", async () => {
  const { usage } = makeHarness();
  const failingApi = new (await import("../src/api.js")).ApiClient("", async () => {
    throw new Error("network down");
  });
  const widget = new ChatWidget(failingApi, usage);
  document.body.append(widget.root);

  await typedSend(widget, "anything at all");
  await settle();

  const note = widget.root.querySelector<HTMLElement>("[data-source='error']");
  expect(note).not.toBeNull();
  expect(note!.textContent!.length).toBeGreaterThan(0);
});

it("emits exactly one question event per send", async () => {
  const { stub, api, usage } = makeHarness();
  const widget = new ChatWidget(api, usage);
  document.body.append(widget.root);

  await typedSend(widget, VERBATIM_QUESTION);
  await settle(usage);
  const questionEvents = stub.events().filter((e) => e.kind === "question_submitted");
  expect(questionEvents).toHaveLength(1);
  expect(questionEvents[0].text).toBe(VERBATIM_QUESTION);
});
