import { ApiClient, ApiError } from "../api.js";
import { labeledField, language, placeholderKey, t, translated } from "../i18n.js";
import { captureSpeech, speechAvailable } from "../speech.js";
import { UsageRecorder } from "../usage.js";
import { errorBanner } from "../widgets/banner.js";

export type Downloader = (blob: Blob, filename: string) => void;

const defaultDownloader: Downloader = (blob, filename) => {
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.download = filename;
  anchor.click();
  URL.revokeObjectURL(url);
};

interface RepeatSection {
  root: HTMLElement;
  values: () => Record<string, string>[];
}

function repeatSection(headingKey: Parameters<typeof translated>[1],
                       addKey: Parameters<typeof translated>[1],
                       fields: [string, Parameters<typeof translated>[1], "input" | "textarea"][]): RepeatSection {
  const root = document.createElement("fieldset");
  root.append(translated("legend", headingKey));
  const rows = document.createElement("div");
  const add = translated("button", addKey);
  add.type = "button";
  add.addEventListener("click", () => {
    const row = document.createElement("div");
    row.className = "repeat-row";
    for (const [name, labelKey, kind] of fields) {
      const field = document.createElement(kind);
      field.dataset.field = name;
      row.append(labeledField(labelKey, field));
    }
    rows.append(row);
  });
  root.append(rows, add);
  return {
    root,
    values: () => Array.from(rows.children).map((row) => {
      const record: Record<string, string> = {};
      row.querySelectorAll<HTMLInputElement | HTMLTextAreaElement>("[data-field]")
        .forEach((field) => {
          record[field.dataset.field as string] = field.value;
        });
      return record;
    }),
  };
}

function buildSection(api: ApiClient, usage: UsageRecorder, download: Downloader): HTMLElement {
  const root = document.createElement("section");
  root.append(translated("h2", "resume.heading"));
  const status = document.createElement("p");
  status.dataset.testid = "resume-status";

  const personal: Record<string, HTMLInputElement> = {};
  for (const [name, key] of [["name", "resume.name"], ["phone", "resume.phone"],
                             ["email", "resume.email"], ["location", "resume.location"]] as const) {
    const input = document.createElement("input");
    input.dataset.testid = `resume-${name}`;
    personal[name] = input;
    root.append(labeledField(key, input));
  }

  const education = repeatSection("resume.education", "resume.addEducation", [
    ["institution", "resume.institution", "input"],
    ["credential", "resume.credential", "input"],
    ["dates", "resume.dates", "input"],
  ]);
  const experience = repeatSection("resume.experience", "resume.addExperience", [
    ["employer", "resume.employer", "input"],
    ["title", "resume.jobTitle", "input"],
    ["dates", "resume.dates", "input"],
    ["bullets", "resume.bullets", "textarea"],
  ]);
  const certifications = repeatSection("resume.certifications", "resume.addCertification", [
    ["name", "resume.certName", "input"],
    ["issuer", "resume.issuer", "input"],
    ["date", "resume.date", "input"],
  ]);

  const skills = document.createElement("input");
  skills.dataset.testid = "resume-skills";
  const skillsLabel = labeledField("resume.skills", skills);

  const build = translated("button", "resume.build");
  build.dataset.testid = "resume-build";
  build.addEventListener("click", () => {
    const payload = {
      personal: {
        name: personal.name.value,
        phone: personal.phone.value,
        email: personal.email.value,
        location: personal.location.value,
      },
      education: education.values(),
      experience: experience.values().map((row) => ({
        employer: row.employer ?? "",
        title: row.title ?? "",
        dates: row.dates ?? "",
        bullets: (row.bullets ?? "").split("\n").map((line) => line.trim()).filter(Boolean),
      })),
      certifications: certifications.values(),
      skills: skills.value.split(",").map((item) => item.trim()).filter(Boolean),
    };
    void api.buildResume(payload).then((blob) => {
      usage.emit("resume_generated", "resume");
      download(blob, "resume.pdf");
      status.dataset.i18n = "resume.built";
      status.textContent = t("resume.built");
    }).catch((error) => {
      status.removeAttribute("data-i18n");
      status.textContent = error instanceof ApiError && error.message
        ? error.message : t("error.offline");
    });
  });

  root.append(education.root, experience.root, certifications.root, skillsLabel, build, status);
  return root;
}

function interviewSection(api: ApiClient, usage: UsageRecorder): HTMLElement {
  const root = document.createElement("section");
  root.append(translated("h2", "interview.heading"));

  const picker = document.createElement("select");
  picker.dataset.testid = "interview-question";
  const pickLabel = labeledField("interview.pick", picker);
  void api.interviewQuestions().then((body) => {
    for (const question of body.questions) {
      const option = document.createElement("option");
      option.value = question.id;
      option.textContent = question.text;
      picker.append(option);
    }
  });

  const start = translated("button", "interview.start");
  start.dataset.testid = "interview-start";
  const flow = document.createElement("div");
  root.append(pickLabel, start, flow);

  start.addEventListener("click", () => {
    usage.emit("button_clicked", "interview-start");
    void api.startInterview(picker.value).then((session) => {
      flow.replaceChildren(turnFlow(api, usage, session.session_id, session.question));
    }).catch(() => {
      flow.replaceChildren(errorBanner(() => flow.replaceChildren()));
    });
  });
  return root;
}

function turnFlow(api: ApiClient, usage: UsageRecorder, sessionId: string,
                  question: string): HTMLElement {
  const root = document.createElement("div");
  const asked = document.createElement("p");
  asked.className = "interview-question";
  asked.textContent = question;
  const answer = document.createElement("textarea");
  placeholderKey(answer, "interview.answer");
  answer.dataset.testid = "interview-answer";
  const submit = translated("button", "interview.submit");
  submit.dataset.testid = "interview-turn";
  const finish = translated("button", "interview.end");
  finish.dataset.testid = "interview-end";
  const feedbackHost = document.createElement("div");
  root.append(asked, answer, submit, finish, feedbackHost);

  if (speechAvailable()) {
    const speak = translated("button", "chat.speak");
    speak.addEventListener("click", () => {
      captureSpeech(language(), (text) => {
        answer.value = text;
      }, () => undefined);
    });
    submit.before(speak);
  }

  submit.addEventListener("click", () => {
    const transcript = answer.value.trim();
    if (!transcript) {
      return;
    }
    usage.emit("button_clicked", "interview-turn");
    answer.value = "";
    void api.submitTurn(sessionId, transcript).then((body) => {
      const card = document.createElement("dl");
      card.className = "feedback-card";
      for (const [key, value] of [["interview.clarity", body.feedback.clarity],
                                  ["interview.confidence", body.feedback.confidence],
                                  ["interview.completeness", body.feedback.completeness]] as const) {
        card.append(translated("dt", key));
        const detail = document.createElement("dd");
        detail.textContent = value;
        card.append(detail);
      }
      feedbackHost.append(card);
    }).catch(() => {
      feedbackHost.append(errorBanner(() => undefined));
    });
  });

  finish.addEventListener("click", () => {
    usage.emit("button_clicked", "interview-end");
    void api.endInterview(sessionId).then((body) => {
      const heading = translated("h3", "interview.summary");
      const summary = document.createElement("p");
      summary.dataset.testid = "interview-summary";
      summary.textContent = body.summary;
      root.replaceChildren(asked, heading, summary);
    }).catch(() => {
      feedbackHost.append(errorBanner(() => undefined));
    });
  });
  return root;
}

export function renderResumeTab(api: ApiClient, usage: UsageRecorder,
                                download: Downloader = defaultDownloader): HTMLElement {
  const root = document.createElement("div");
  root.append(buildSection(api, usage, download), interviewSection(api, usage));
  return root;
}
