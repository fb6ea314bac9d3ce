import { ApiClient } from "../api.js";
import { MessageKey } from "../catalog.js";
import { labeledField, language, placeholderKey, translated } from "../i18n.js";
import { UsageRecorder } from "../usage.js";
import { accordionItem } from "../widgets/accordion.js";
import { errorBanner } from "../widgets/banner.js";

const PHRASE_CATEGORIES = [
  "Common Words",
  "Words for Healthy and Unhealthy Relationships",
  "Words for Job Search",
  "Words for Emotional Well-Being",
  "Words for a Different Kind of Feeling",
  "Greetings",
  "Introductions",
  "General Questions and Responses",
  "Feeling and Emotional Well-Being",
  "Health and Well-Being",
  "School and Family",
];

const SOURCE_LANGS = ["es", "fr", "ar"];

export function renderTranslatorTab(api: ApiClient, usage: UsageRecorder): HTMLElement {
  const root = document.createElement("div");

  root.append(translated("h2", "trans.phrases"));
  for (const category of PHRASE_CATEGORIES) {
    const header = translated("span", `phrasecat.${category}` as MessageKey);
    root.append(accordionItem({
      header,
      render: async (panel) => {
        try {
          const body = await api.listPhrases(category);
          const table = document.createElement("table");
          for (const phrase of body.phrases) {
            const row = document.createElement("tr");
            const textCell = document.createElement("td");
            textCell.textContent = phrase.text;
            const playCell = document.createElement("td");
            const play = translated("button", "trans.play");
            play.dataset.testid = `play-${phrase.id}`;
            play.addEventListener("click", () => {
              usage.emit("audio_played", `${phrase.id}:${language()}`);
              const audio = document.createElement("audio");
              audio.src = `/static/audio/${phrase.audio}`;
              void audio.play?.().catch(() => undefined);
            });
            playCell.append(play);
            row.append(textCell, playCell);
            table.append(row);
          }
          panel.append(table);
        } catch {
          panel.append(errorBanner(() => panel.replaceChildren()));
        }
      },
    }));
  }

  root.append(translated("h2", "trans.custom"));
  const form = document.createElement("div");
  form.className = "translate-form";
  const select = document.createElement("select");
  for (const code of SOURCE_LANGS) {
    const option = document.createElement("option");
    option.value = code;
    option.textContent = code;
    select.append(option);
  }
  const input = document.createElement("textarea");
  placeholderKey(input, "trans.input");
  input.dataset.testid = "translate-input";
  const submit = translated("button", "trans.submit");
  submit.dataset.testid = "translate-submit";
  const result = document.createElement("p");
  result.dataset.testid = "translate-result";

  submit.addEventListener("click", () => {
    const text = input.value.trim();
    if (!text) {
      return;
    }
    usage.emit("button_clicked", "translate-submit");
    void api.translate(select.value, text).then((body) => {
      result.textContent = body.text;
    }).catch((error) => {
      result.replaceChildren(errorBanner(() => result.replaceChildren()));
      if (error?.message) {
        result.title = error.message;
      }
    });
  });

  form.append(labeledField("trans.sourceLang", select), input, submit);
  root.append(form, translated("h3", "trans.result"), result);
  return root;
}
